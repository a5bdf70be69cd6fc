#include "father/scoring.hpp"

#include <algorithm>
#include <stdexcept>

namespace father {

ScoreReport score(const std::vector<PartState>& parts, double tpt, const Order& order) {
    ScoreReport rep;
    rep.shipments.assign(order.shipments, {});
    for (int s = 0; s < order.shipments; ++s) {
        auto& sh = rep.shipments[s];
        bool all_perfect = true;
        for (int k = 0; k < order.parts_per_shipment; ++k) {
            int part_id = s * order.parts_per_shipment + k;
            auto it = std::find_if(parts.begin(), parts.end(),
                                   [&](const PartState& p) { return p.part_id == part_id; });
            bool present = it != parts.end() && it->loc == Location::on_tray &&
                           it->slot == part_id;
            bool posed = present && it->pose_error <= order.pose_tolerance;
            sh.presence += present ? 1 : 0;
            sh.pose += posed ? 1 : 0;
            all_perfect = all_perfect && present && posed;
        }
        sh.bonus = all_perfect ? order.parts_per_shipment : 0;
        rep.total_points += sh.presence + sh.pose + sh.bonus;
    }
    rep.tgs = order.max_points() > 0
                  ? static_cast<double>(rep.total_points) / order.max_points()
                  : 0.0;
    rep.tpt = tpt;
    return rep;
}

std::vector<CompareRow> compare(const std::vector<ScoreReport>& reports, bool with_ratio) {
    if (reports.size() < 2) throw std::invalid_argument("compare: need at least 2 reports");
    double tpt_static = 0.0;
    if (with_ratio) {
        auto it = std::find_if(reports.begin(), reports.end(),
                               [](const ScoreReport& r) { return r.label == "static"; });
        if (it == reports.end())
            throw std::invalid_argument("compare: ratios requested but no \"static\" report");
        tpt_static = it->tpt;
    }
    std::vector<CompareRow> rows;
    for (const auto& r : reports) {
        CompareRow row;
        row.label = r.label;
        row.points = r.total_points;
        row.tgs = r.tgs;
        row.tpt = r.tpt;
        row.ratio = (with_ratio && tpt_static > 0.0) ? r.tpt / tpt_static : 0.0;
        rows.push_back(row);
    }
    std::sort(rows.begin(), rows.end(),
              [](const CompareRow& a, const CompareRow& b) { return a.label < b.label; });
    return rows;
}

}  // namespace father
