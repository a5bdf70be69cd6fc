#pragma once
#include <string>
#include <vector>

#include "father/core.hpp"

namespace father {

enum class HazardKind { emergency_brake, lane_change };

std::string to_string(HazardKind k);

// Motorway incident that produces an acceleration pulse on the trailer.
// peak_accel is signed: brakes act on -x, lane changes on +/-y.
struct RoadEvent {
    int id = 0;
    HazardKind kind = HazardKind::emergency_brake;
    TimePoint onset = 0.0;
    Duration duration = 0.0;
    double peak_accel = 0.0;
    Duration sign_lead = 30.0;

    Interval hazard() const { return {onset, onset + duration}; }
};

// Advance hazard signage, broadcast sign_lead seconds before onset.
struct CitsMessage {
    int event_id = 0;
    TimePoint sent_at = 0.0;
    Interval hazard;
    HazardKind kind = HazardKind::emergency_brake;
};

// Constant + uniform-jitter delay with Bernoulli loss. Stand-in for the
// packet-level radio link; the planner only consumes arrival times.
struct ChannelModel {
    double base_latency = 0.05;
    double jitter_max = 0.01;
    double loss_prob = 0.0;
};

struct Delivery {
    CitsMessage msg;
    bool lost = false;
    TimePoint arrival = 0.0;
};

struct EventGenParams {
    double rate_per_hour = 0.0;
    double brake_fraction = 0.7;   // remainder are lane changes
    double peak_min = 2.0;         // magnitudes, sign applied per kind
    double peak_max = 7.0;
    double duration_min = 2.0;
    double duration_max = 5.0;
    double sign_lead = 30.0;
};

// Poisson arrivals over [0, horizon]. Events whose sign could not have been
// posted (onset < sign_lead) or that extend past the horizon are discarded.
std::vector<RoadEvent> generate_events(const EventGenParams& params, Duration horizon, Rng& rng);

std::vector<CitsMessage> signage(const std::vector<RoadEvent>& events);

Delivery transmit(const CitsMessage& msg, const ChannelModel& ch, Rng& rng);

}  // namespace father
