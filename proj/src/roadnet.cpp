#include "father/roadnet.hpp"

#include <algorithm>
#include <stdexcept>

namespace father {

std::string to_string(HazardKind k) {
    return k == HazardKind::emergency_brake ? "emergency_brake" : "lane_change";
}

std::vector<RoadEvent> generate_events(const EventGenParams& params, Duration horizon, Rng& rng) {
    if (params.rate_per_hour < 0.0)
        throw std::invalid_argument("generate_events: rate must be >= 0");
    std::vector<RoadEvent> out;
    if (params.rate_per_hour == 0.0 || horizon <= 0.0) return out;

    double mean = params.rate_per_hour * horizon / 3600.0;
    std::poisson_distribution<int> count_dist(mean);
    std::uniform_real_distribution<double> onset_dist(0.0, horizon);
    std::uniform_real_distribution<double> dur_dist(params.duration_min, params.duration_max);
    std::uniform_real_distribution<double> peak_dist(params.peak_min, params.peak_max);
    std::uniform_real_distribution<double> unit(0.0, 1.0);

    int n = count_dist(rng);
    for (int i = 0; i < n; ++i) {
        RoadEvent ev;
        ev.onset = onset_dist(rng);
        ev.duration = dur_dist(rng);
        double mag = peak_dist(rng);
        bool brake = unit(rng) < params.brake_fraction;
        if (brake) {
            ev.kind = HazardKind::emergency_brake;
            ev.peak_accel = -mag;
        } else {
            ev.kind = HazardKind::lane_change;
            ev.peak_accel = unit(rng) < 0.5 ? mag : -mag;
        }
        ev.sign_lead = params.sign_lead;
        // no sign could have been posted, or pulse runs off the horizon
        if (ev.onset < ev.sign_lead) continue;
        if (ev.onset + ev.duration > horizon) continue;
        out.push_back(ev);
    }
    std::sort(out.begin(), out.end(),
              [](const RoadEvent& a, const RoadEvent& b) { return a.onset < b.onset; });
    for (std::size_t i = 0; i < out.size(); ++i) out[i].id = static_cast<int>(i);
    return out;
}

std::vector<CitsMessage> signage(const std::vector<RoadEvent>& events) {
    std::vector<CitsMessage> out;
    out.reserve(events.size());
    for (const auto& ev : events) {
        CitsMessage m;
        m.event_id = ev.id;
        m.sent_at = ev.onset - ev.sign_lead;
        m.hazard = ev.hazard();
        m.kind = ev.kind;
        out.push_back(m);
    }
    return out;
}

Delivery transmit(const CitsMessage& msg, const ChannelModel& ch, Rng& rng) {
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    Delivery d;
    d.msg = msg;
    double u = unit(rng);
    double jitter = std::uniform_real_distribution<double>(0.0, ch.jitter_max)(rng);
    if (u < ch.loss_prob) {
        d.lost = true;
        return d;
    }
    d.arrival = msg.sent_at + ch.base_latency + jitter;
    return d;
}

}  // namespace father
