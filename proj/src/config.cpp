#include "father/config.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"

namespace father {

using nlohmann::json;

std::string to_string(Strategy s) {
    switch (s) {
        case Strategy::static_: return "static";
        case Strategy::on_wheels: return "on_wheels";
        case Strategy::wait: return "wait";
        case Strategy::replan_til: return "replan_til";
    }
    return "?";
}

Strategy strategy_from_string(const std::string& s) {
    if (s == "static") return Strategy::static_;
    if (s == "on_wheels") return Strategy::on_wheels;
    if (s == "wait") return Strategy::wait;
    if (s == "replan_til") return Strategy::replan_til;
    throw ConfigError("config: key \"strategy\": unknown value \"" + s +
                      "\" (expected static|on_wheels|wait|replan_til)");
}

namespace {

double get_num(const json& j, const std::string& ctx, const char* key, double dflt) {
    if (!j.contains(key)) return dflt;
    if (!j[key].is_number()) throw ConfigError("config: key \"" + ctx + key + "\" must be a number");
    return j[key].get<double>();
}

void require_positive(double v, const std::string& key) {
    if (v <= 0.0) throw ConfigError("config: key \"" + key + "\" must be > 0");
}

void require_nonneg(double v, const std::string& key) {
    if (v < 0.0) throw ConfigError("config: key \"" + key + "\" must be >= 0");
}

RoadEvent event_from_json(const json& j, int idx) {
    std::string ctx = "road_events.events[" + std::to_string(idx) + "].";
    RoadEvent ev;
    ev.id = idx;
    std::string kind = j.value("kind", "emergency_brake");
    if (kind == "emergency_brake")
        ev.kind = HazardKind::emergency_brake;
    else if (kind == "lane_change")
        ev.kind = HazardKind::lane_change;
    else
        throw ConfigError("config: key \"" + ctx + "kind\": unknown value \"" + kind + "\"");
    ev.onset = get_num(j, ctx, "onset", 0.0);
    ev.duration = get_num(j, ctx, "duration", 3.0);
    ev.peak_accel = get_num(j, ctx, "peak_accel", -6.0);
    ev.sign_lead = get_num(j, ctx, "sign_lead", 30.0);
    require_positive(ev.duration, ctx + "duration");
    require_nonneg(ev.sign_lead, ctx + "sign_lead");
    if (ev.onset - ev.sign_lead < 0.0)
        throw ConfigError("config: key \"" + ctx + "onset\": onset - sign_lead must be >= 0");
    return ev;
}

}  // namespace

std::vector<Arm> ScenarioConfig::make_arms() const {
    std::vector<Arm> out;
    for (std::size_t i = 0; i < arms.size(); ++i) {
        Arm a;
        a.id = static_cast<int>(i);
        a.name = arms[i].name;
        a.kind = arms[i].kind;
        a.pick = arms[i].pick;
        a.transfer = arms[i].transfer;
        a.place = arms[i].place;
        a.reach = arms[i].reach;
        out.push_back(a);
    }
    return out;
}

std::vector<Task> ScenarioConfig::make_tasks() const {
    std::vector<Task> out;
    int n = order.part_count();
    for (int i = 0; i < n; ++i) out.push_back({i, i, i % 4, i});
    return out;
}

ScenarioConfig config_from_json_text(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ConfigError(std::string("config: parse error: ") + e.what());
    }

    ScenarioConfig cfg;
    if (!j.contains("strategy")) throw ConfigError("config: key \"strategy\" is required");
    cfg.strategy = strategy_from_string(j["strategy"].get<std::string>());
    cfg.seed = j.value("seed", std::uint64_t{1});
    cfg.time_cap = get_num(j, "", "time_cap", 600.0);
    require_positive(cfg.time_cap, "time_cap");

    if (j.contains("trace")) {
        const auto& t = j["trace"];
        cfg.trace.source = t.value("source", "synth");
        if (cfg.trace.source != "synth" && cfg.trace.source != "file")
            throw ConfigError("config: key \"trace.source\": expected synth|file");
        cfg.trace.path = t.value("path", "");
        cfg.trace.horizon = get_num(t, "trace.", "horizon", 300.0);
        cfg.trace.noise_rms = get_num(t, "trace.", "noise_rms", 0.0);
        require_positive(cfg.trace.horizon, "trace.horizon");
        require_nonneg(cfg.trace.noise_rms, "trace.noise_rms");
        if (cfg.trace.source == "file") {
            std::ifstream probe(cfg.trace.path);
            if (!probe)
                throw ConfigError("config: key \"trace.path\": file not readable: " +
                                  cfg.trace.path);
        }
    }

    if (j.contains("road_events")) {
        const auto& r = j["road_events"];
        cfg.road_events.mode = r.value("mode", "list");
        if (cfg.road_events.mode != "list" && cfg.road_events.mode != "poisson")
            throw ConfigError("config: key \"road_events.mode\": expected list|poisson");
        if (r.contains("events")) {
            int idx = 0;
            for (const auto& e : r["events"])
                cfg.road_events.events.push_back(event_from_json(e, idx++));
        }
        auto& g = cfg.road_events.gen;
        g.rate_per_hour = get_num(r, "road_events.", "rate_per_hour", 0.0);
        g.brake_fraction = get_num(r, "road_events.", "brake_fraction", 0.7);
        g.peak_min = get_num(r, "road_events.", "peak_min", 2.0);
        g.peak_max = get_num(r, "road_events.", "peak_max", 7.0);
        g.duration_min = get_num(r, "road_events.", "duration_min", 2.0);
        g.duration_max = get_num(r, "road_events.", "duration_max", 5.0);
        g.sign_lead = get_num(r, "road_events.", "sign_lead", 30.0);
        require_nonneg(g.rate_per_hour, "road_events.rate_per_hour");
        if (g.brake_fraction < 0.0 || g.brake_fraction > 1.0)
            throw ConfigError("config: key \"road_events.brake_fraction\" out of [0,1]");
    }

    if (j.contains("channel")) {
        const auto& c = j["channel"];
        cfg.channel.base_latency = get_num(c, "channel.", "base_latency", 0.05);
        cfg.channel.jitter_max = get_num(c, "channel.", "jitter_max", 0.01);
        cfg.channel.loss_prob = get_num(c, "channel.", "loss_prob", 0.0);
        require_nonneg(cfg.channel.base_latency, "channel.base_latency");
        require_nonneg(cfg.channel.jitter_max, "channel.jitter_max");
        if (cfg.channel.loss_prob < 0.0 || cfg.channel.loss_prob > 1.0)
            throw ConfigError("config: key \"channel.loss_prob\" out of [0,1]");
    }

    if (j.contains("disturbance")) {
        const auto& d = j["disturbance"];
        cfg.disturbance.a_slip = get_num(d, "disturbance.", "a_slip", 2.0);
        cfg.disturbance.a_drop = get_num(d, "disturbance.", "a_drop", 6.0);
        cfg.disturbance.k_pose = get_num(d, "disturbance.", "k_pose", 0.01);
        cfg.disturbance.drop_pose_penalty = get_num(d, "disturbance.", "drop_pose_penalty", 0.05);
        if (!(cfg.disturbance.a_slip > 0.0 && cfg.disturbance.a_slip < cfg.disturbance.a_drop))
            throw ConfigError("config: key \"disturbance.a_slip\": need 0 < a_slip < a_drop");
        require_nonneg(cfg.disturbance.k_pose, "disturbance.k_pose");
        require_nonneg(cfg.disturbance.drop_pose_penalty, "disturbance.drop_pose_penalty");
    }

    if (j.contains("planner")) {
        const auto& p = j["planner"];
        cfg.planner.margin = get_num(p, "planner.", "margin", 2.0);
        require_nonneg(cfg.planner.margin, "planner.margin");
        std::string m = p.value("til_mode", "at_start");
        if (m == "at_start")
            cfg.planner.mode = TilMode::at_start;
        else if (m == "conservative")
            cfg.planner.mode = TilMode::conservative;
        else
            throw ConfigError("config: key \"planner.til_mode\": expected at_start|conservative");
    }

    if (j.contains("order")) {
        const auto& o = j["order"];
        cfg.order.shipments = static_cast<int>(get_num(o, "order.", "shipments", 2.0));
        cfg.order.parts_per_shipment =
            static_cast<int>(get_num(o, "order.", "parts_per_shipment", 6.0));
        cfg.order.pose_tolerance = get_num(o, "order.", "pose_tolerance", 0.03);
        if (cfg.order.shipments < 1)
            throw ConfigError("config: key \"order.shipments\" must be >= 1");
        if (cfg.order.parts_per_shipment < 1)
            throw ConfigError("config: key \"order.parts_per_shipment\" must be >= 1");
        require_positive(cfg.order.pose_tolerance, "order.pose_tolerance");
    }

    if (j.contains("arms")) {
        int idx = 0;
        for (const auto& a : j["arms"]) {
            std::string ctx = "arms[" + std::to_string(idx) + "].";
            ArmSpec spec;
            spec.name = a.value("name", "arm" + std::to_string(idx));
            std::string kind = a.value("kind", "industrial");
            if (kind == "industrial")
                spec.kind = ArmKind::industrial;
            else if (kind == "modular")
                spec.kind = ArmKind::modular;
            else
                throw ConfigError("config: key \"" + ctx + "kind\": expected industrial|modular");
            spec.pick = get_num(a, ctx, "pick", 4.0);
            spec.transfer = get_num(a, ctx, "transfer", 8.0);
            spec.place = get_num(a, ctx, "place", 4.0);
            require_positive(spec.pick, ctx + "pick");
            require_positive(spec.transfer, ctx + "transfer");
            require_positive(spec.place, ctx + "place");
            if (a.contains("reach"))
                for (const auto& s : a["reach"]) spec.reach.push_back(s.get<int>());
            cfg.arms.push_back(spec);
            ++idx;
        }
        if (cfg.arms.empty()) throw ConfigError("config: key \"arms\" must not be empty");
    } else {
        cfg.arms = {{"industrial", ArmKind::industrial, 4.0, 8.0, 4.0, {}},
                    {"modular_a", ArmKind::modular, 6.0, 12.0, 6.0, {}},
                    {"modular_b", ArmKind::modular, 6.0, 12.0, 6.0, {}}};
    }

    return cfg;
}

ScenarioConfig load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("config: cannot open " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return config_from_json_text(ss.str());
}

std::string config_to_json_text(const ScenarioConfig& cfg) {
    json j;
    j["strategy"] = to_string(cfg.strategy);
    j["seed"] = cfg.seed;
    j["time_cap"] = cfg.time_cap;
    j["trace"] = {{"source", cfg.trace.source},
                  {"path", cfg.trace.path},
                  {"horizon", cfg.trace.horizon},
                  {"noise_rms", cfg.trace.noise_rms}};
    json events = json::array();
    for (const auto& ev : cfg.road_events.events)
        events.push_back({{"kind", to_string(ev.kind)},
                          {"onset", ev.onset},
                          {"duration", ev.duration},
                          {"peak_accel", ev.peak_accel},
                          {"sign_lead", ev.sign_lead}});
    j["road_events"] = {{"mode", cfg.road_events.mode},
                        {"events", events},
                        {"rate_per_hour", cfg.road_events.gen.rate_per_hour},
                        {"brake_fraction", cfg.road_events.gen.brake_fraction},
                        {"peak_min", cfg.road_events.gen.peak_min},
                        {"peak_max", cfg.road_events.gen.peak_max},
                        {"duration_min", cfg.road_events.gen.duration_min},
                        {"duration_max", cfg.road_events.gen.duration_max},
                        {"sign_lead", cfg.road_events.gen.sign_lead}};
    j["channel"] = {{"base_latency", cfg.channel.base_latency},
                    {"jitter_max", cfg.channel.jitter_max},
                    {"loss_prob", cfg.channel.loss_prob}};
    j["disturbance"] = {{"a_slip", cfg.disturbance.a_slip},
                        {"a_drop", cfg.disturbance.a_drop},
                        {"k_pose", cfg.disturbance.k_pose},
                        {"drop_pose_penalty", cfg.disturbance.drop_pose_penalty}};
    j["planner"] = {{"margin", cfg.planner.margin},
                    {"til_mode", cfg.planner.mode == TilMode::at_start ? "at_start"
                                                                       : "conservative"}};
    j["order"] = {{"shipments", cfg.order.shipments},
                  {"parts_per_shipment", cfg.order.parts_per_shipment},
                  {"pose_tolerance", cfg.order.pose_tolerance}};
    json arms = json::array();
    for (const auto& a : cfg.arms)
        arms.push_back({{"name", a.name},
                        {"kind", a.kind == ArmKind::industrial ? "industrial" : "modular"},
                        {"pick", a.pick},
                        {"transfer", a.transfer},
                        {"place", a.place},
                        {"reach", a.reach}});
    j["arms"] = arms;
    return j.dump(2) + "\n";
}

}  // namespace father
