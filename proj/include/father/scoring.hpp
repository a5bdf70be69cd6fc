#pragma once
#include <string>
#include <vector>

#include "father/disturbance.hpp"

namespace father {

// Kit order: shipments of parts with unique tray slots. Part ids run
// 0 .. shipments*parts_per_shipment-1; part i belongs to shipment
// i / parts_per_shipment and targets slot i.
struct Order {
    int shipments = 2;
    int parts_per_shipment = 6;
    double pose_tolerance = 0.03;  // meters

    int part_count() const { return shipments * parts_per_shipment; }
    int max_points() const { return shipments * parts_per_shipment * 3; }
};

struct ShipmentScore {
    int presence = 0;
    int pose = 0;
    int bonus = 0;  // all-or-nothing: parts_per_shipment iff every part scores both
};

struct ScoreReport {
    std::string label;
    std::vector<ShipmentScore> shipments;
    int total_points = 0;
    double tgs = 0.0;  // achieved / maximum
    double tpt = 0.0;  // seconds to order completion (or time cap)
};

// Per part: presence point if the correct part occupies its slot, pose point
// if additionally pose_error <= tolerance. Depends only on the final part
// states and the completion time.
ScoreReport score(const std::vector<PartState>& parts, double tpt, const Order& order);

struct CompareRow {
    std::string label;
    int points = 0;
    double tgs = 0.0;
    double tpt = 0.0;
    double ratio = 0.0;  // tpt / tpt(static)
};

// Comparison table sorted by label; ratios are relative to the "static" row.
std::vector<CompareRow> compare(const std::vector<ScoreReport>& reports,
                                bool with_ratio = true);

}  // namespace father
