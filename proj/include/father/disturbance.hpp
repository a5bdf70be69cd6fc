#pragma once
#include <string>
#include <vector>

#include "father/core.hpp"
#include "father/motion.hpp"

namespace father {

// Threshold surrogate for the emergent physics: below a_slip nothing happens,
// between a_slip and a_drop a grasped or loose part drifts at
// k_pose * (a - a_slip) m per second, above a_drop a held part is dropped.
// A drop dents the part: drop_pose_penalty is added to its pose error and is
// never reset by a re-pick.
struct DisturbanceParams {
    double a_slip = 2.0;
    double a_drop = 6.0;
    double k_pose = 0.01;
    double drop_pose_penalty = 0.05;
};

enum class Location { in_bin, held, on_tray, staging };

struct PartState {
    int part_id = 0;
    Location loc = Location::in_bin;
    int arm = -1;        // valid when held
    int slot = -1;       // valid when on_tray
    double pose_error = 0.0;
    bool secured = false;  // tray slot fixture engaged; no further drift
};

enum class IncidentKind { slip, drop };

struct Incident {
    TimePoint t = 0.0;
    int part_id = 0;
    IncidentKind kind = IncidentKind::slip;
    double a_mag = 0.0;
};

// One acceleration tick: held parts above a_drop are dropped to staging,
// held and unsecured on-tray parts above a_slip drift. Bins are walled.
void apply_accel(std::vector<PartState>& parts, double a_mag, double dt,
                 const DisturbanceParams& params, TimePoint now,
                 std::vector<Incident>& incidents);

enum class ExposureClass { safe, slip, drop };

// Classify an action interval by the trace peak it would see. A peak exactly
// equal to a threshold classifies to the milder class.
ExposureClass window_exposure(const AccelTrace& trace, Interval action_interval,
                              const DisturbanceParams& params);

}  // namespace father
