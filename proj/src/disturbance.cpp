#include "father/disturbance.hpp"

#include <stdexcept>

namespace father {

void apply_accel(std::vector<PartState>& parts, double a_mag, double dt,
                 const DisturbanceParams& params, TimePoint now,
                 std::vector<Incident>& incidents) {
    if (dt <= 0.0) throw std::invalid_argument("apply_accel: dt must be > 0");
    for (auto& p : parts) {
        switch (p.loc) {
            case Location::held:
                if (a_mag > params.a_drop) {
                    p.loc = Location::staging;
                    p.arm = -1;
                    p.pose_error += params.drop_pose_penalty;
                    incidents.push_back({now, p.part_id, IncidentKind::drop, a_mag});
                } else if (a_mag > params.a_slip) {
                    p.pose_error += params.k_pose * (a_mag - params.a_slip) * dt;
                    incidents.push_back({now, p.part_id, IncidentKind::slip, a_mag});
                }
                break;
            case Location::on_tray:
                if (!p.secured && a_mag > params.a_slip) {
                    p.pose_error += params.k_pose * (a_mag - params.a_slip) * dt;
                    incidents.push_back({now, p.part_id, IncidentKind::slip, a_mag});
                }
                break;
            case Location::in_bin:
            case Location::staging:
                break;  // walled
        }
    }
}

ExposureClass window_exposure(const AccelTrace& trace, Interval action_interval,
                              const DisturbanceParams& params) {
    double peak = peak_magnitude(trace, action_interval);
    if (peak > params.a_drop) return ExposureClass::drop;
    if (peak > params.a_slip) return ExposureClass::slip;
    return ExposureClass::safe;
}

}  // namespace father
