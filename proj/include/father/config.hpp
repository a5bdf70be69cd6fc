#pragma once
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "father/disturbance.hpp"
#include "father/planner.hpp"
#include "father/roadnet.hpp"
#include "father/scoring.hpp"

namespace father {

enum class Strategy { static_, on_wheels, wait, replan_til };

std::string to_string(Strategy s);
Strategy strategy_from_string(const std::string& s);

struct TraceSpec {
    std::string source = "synth";  // "synth" | "file"
    std::string path;              // when source == "file"
    double horizon = 300.0;
    double noise_rms = 0.0;
};

struct RoadEventsSpec {
    std::string mode = "list";  // "list" | "poisson"
    std::vector<RoadEvent> events;
    EventGenParams gen;
};

struct PlannerSpec {
    double margin = 2.0;
    TilMode mode = TilMode::at_start;
};

struct ArmSpec {
    std::string name;
    ArmKind kind = ArmKind::industrial;
    double pick = 0.0;
    double transfer = 0.0;
    double place = 0.0;
    std::vector<int> reach;  // empty = all slots
};

struct ScenarioConfig {
    Strategy strategy = Strategy::static_;
    std::uint64_t seed = 1;
    double time_cap = 600.0;
    TraceSpec trace;
    RoadEventsSpec road_events;
    ChannelModel channel;
    DisturbanceParams disturbance;
    PlannerSpec planner;
    Order order;
    std::vector<ArmSpec> arms;  // defaulted to 1 industrial + 2 modular when absent

    std::vector<Arm> make_arms() const;
    std::vector<Task> make_tasks() const;
};

// Loads, validates, and fills defaults. Errors name the offending key.
ScenarioConfig load_config(const std::string& path);
ScenarioConfig config_from_json_text(const std::string& text);
std::string config_to_json_text(const ScenarioConfig& cfg);

class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace father
