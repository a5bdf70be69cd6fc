#pragma once
#include <string>
#include <vector>

#include "father/config.hpp"
#include "father/motion.hpp"

namespace father {

struct SimEventRow {
    TimePoint t = 0.0;
    long seq = 0;
    std::string kind;    // action_start, action_end, message_arrival, slip, drop,
                         // replan, order_complete
    std::string detail;
};

struct RunResult {
    ScenarioConfig config;
    std::vector<RoadEvent> events;
    AccelTrace trace;
    std::vector<Delivery> deliveries;
    std::vector<PartState> parts;
    std::vector<Incident> incidents;
    std::vector<SimEventRow> timeline;
    std::vector<Schedule> schedules;          // initial plan + each replan
    std::vector<DurativeAction> executed;     // actions as actually dispatched
    double tpt = 0.0;
    bool completed = false;
};

struct GateDecision {
    bool start = true;
    TimePoint defer_until = 0.0;
};

// til_enable check at dispatch: static and on_wheels always start; wait and
// replan_til start only when the action is feasible against the currently
// known windows, otherwise defer to the earliest feasible instant.
GateDecision dispatch_gate(TimePoint now, Duration duration,
                           const std::vector<BlackoutWindow>& known_windows,
                           Strategy strategy, TilMode mode);

RunResult simulate(const ScenarioConfig& cfg);

}  // namespace father
