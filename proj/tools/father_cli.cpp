#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "father/config.hpp"
#include "father/executor.hpp"
#include "father/report.hpp"
#include "father/scoring.hpp"

namespace fs = std::filesystem;
using namespace father;

namespace {

// "1:50" (inclusive range) or "1,2,7"
std::vector<std::uint64_t> parse_seeds(const std::string& spec) {
    std::vector<std::uint64_t> seeds;
    auto colon = spec.find(':');
    if (colon != std::string::npos) {
        std::uint64_t lo = std::stoull(spec.substr(0, colon));
        std::uint64_t hi = std::stoull(spec.substr(colon + 1));
        for (std::uint64_t s = lo; s <= hi; ++s) seeds.push_back(s);
    } else {
        std::stringstream ss(spec);
        std::string tok;
        while (std::getline(ss, tok, ','))
            if (!tok.empty()) seeds.push_back(std::stoull(tok));
    }
    if (seeds.empty()) throw ConfigError("seeds: empty seed list");
    return seeds;
}

std::vector<std::string> split_csv(const std::string& s) {
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ','))
        if (!tok.empty()) out.push_back(tok);
    return out;
}

void write_manifest(const fs::path& out_dir, const nlohmann::json& j) {
    std::ofstream out(out_dir / "manifest.json");
    out << j.dump(2) << "\n";
}

int cmd_run(const std::string& config_path, std::int64_t seed, const std::string& strategy,
            const std::string& out_dir) {
    ScenarioConfig cfg = load_config(config_path);
    if (seed >= 0) cfg.seed = static_cast<std::uint64_t>(seed);
    if (!strategy.empty()) cfg.strategy = strategy_from_string(strategy);

    fs::create_directories(out_dir);
    fs::path out(out_dir);
    {
        std::ofstream echo(out / "resolved_config.json");
        echo << config_to_json_text(cfg);
    }

    RunResult res = simulate(cfg);
    ScoreReport rep = score(res.parts, res.tpt, cfg.order);
    rep.label = to_string(cfg.strategy);

    write_timeline_csv(res, (out / "timeline.csv").string());
    write_events_csv(res, (out / "events.csv").string());
    write_schedules_csv(res, (out / "schedules.csv").string());
    {
        std::ofstream sc(out / "score.csv");
        sc << "label,points,tgs,tpt,ratio\n";
        sc << rep.label << ',' << rep.total_points << ',' << fmt_num(rep.tgs) << ','
           << fmt_num(rep.tpt) << ",\n";
    }
    write_manifest(out, {{"command", "run"},
                         {"config", config_path},
                         {"seed", cfg.seed},
                         {"strategy", to_string(cfg.strategy)},
                         {"out", out_dir}});

    std::cout << "strategy=" << rep.label << " points=" << rep.total_points
              << " tgs=" << fmt_num(rep.tgs) << " tpt=" << fmt_num(rep.tpt)
              << (res.completed ? "" : " (incomplete)") << "\n";
    return 0;
}

int cmd_compare(const std::string& config_path, const std::string& seeds_spec,
                const std::string& strategies_spec, const std::string& out_dir) {
    ScenarioConfig base = load_config(config_path);
    auto seeds = parse_seeds(seeds_spec);
    std::vector<std::string> strategies = split_csv(strategies_spec);
    if (strategies.empty())
        strategies = {"static", "on_wheels", "wait", "replan_til"};
    for (const auto& s : strategies) strategy_from_string(s);  // validate early
    std::sort(strategies.begin(), strategies.end());

    std::vector<SweepRun> runs;
    std::map<std::string, SweepAggregate> agg;
    // one stochastic input set per seed, shared across strategies
    for (auto seed : seeds) {
        for (const auto& strat : strategies) {
            ScenarioConfig cfg = base;
            cfg.seed = seed;
            cfg.strategy = strategy_from_string(strat);
            RunResult res = simulate(cfg);
            ScoreReport rep = score(res.parts, res.tpt, cfg.order);
            runs.push_back({strat, seed, rep.total_points, rep.tgs, rep.tpt});
            auto& a = agg[strat];
            a.strategy = strat;
            a.mean_points += rep.total_points;
            a.mean_tgs += rep.tgs;
            a.mean_tpt += rep.tpt;
        }
    }
    double n = static_cast<double>(seeds.size());
    for (auto& [_, a] : agg) {
        a.mean_points /= n;
        a.mean_tgs /= n;
        a.mean_tpt /= n;
    }
    double tpt_static = agg.count("static") ? agg["static"].mean_tpt : 0.0;
    std::vector<SweepAggregate> aggregates;
    for (auto& [_, a] : agg) {
        a.tpt_ratio = tpt_static > 0.0 ? a.mean_tpt / tpt_static : 0.0;
        aggregates.push_back(a);
    }

    fs::create_directories(out_dir);
    fs::path out(out_dir);
    write_comparison_csv(aggregates, runs, (out / "comparison.csv").string());
    write_chart_svg(aggregates, (out / "chart.svg").string());
    {
        std::ofstream echo(out / "resolved_config.json");
        echo << config_to_json_text(base);
    }
    write_manifest(out, {{"command", "compare"},
                         {"config", config_path},
                         {"seeds", seeds_spec},
                         {"strategies", strategies},
                         {"out", out_dir}});

    for (const auto& a : aggregates)
        std::cout << a.strategy << " points=" << fmt_num(a.mean_points)
                  << " tgs=" << fmt_num(a.mean_tgs) << " tpt=" << fmt_num(a.mean_tpt)
                  << " ratio=" << fmt_num(a.tpt_ratio) << "\n";
    return 0;
}

int cmd_gen_trace(const std::string& config_path, const std::string& out_path) {
    ScenarioConfig cfg = load_config(config_path);
    Rng events_rng = make_rng(cfg.seed, "events");
    Rng noise_rng = make_rng(cfg.seed, "noise");
    std::vector<RoadEvent> events =
        cfg.road_events.mode == "poisson"
            ? generate_events(cfg.road_events.gen, cfg.trace.horizon, events_rng)
            : cfg.road_events.events;
    AccelTrace trace = synth_trace(events, cfg.trace.horizon, cfg.trace.noise_rms, noise_rng);
    save_trace(trace, out_path);
    std::cout << "wrote " << trace.samples.size() << " samples\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"FATHER co-simulation: robot cell on a moving trailer"};
    app.require_subcommand(1);

    std::string config_path, out_dir = "out", strategy, seeds_spec = "1",
                strategies_spec, trace_out;
    std::int64_t seed = -1;

    auto* run = app.add_subcommand("run", "run one scenario");
    run->add_option("--config", config_path, "scenario config file")->required();
    run->add_option("--seed", seed, "override config seed");
    run->add_option("--strategy", strategy, "override config strategy");
    run->add_option("--out", out_dir, "output directory");

    auto* cmp = app.add_subcommand("compare", "seed sweep across strategies");
    cmp->add_option("--config", config_path, "scenario config file")->required();
    cmp->add_option("--seeds", seeds_spec, "seed list: 1:50 or 1,2,3");
    cmp->add_option("--strategies", strategies_spec, "comma list; default all four");
    cmp->add_option("--out", out_dir, "output directory");

    auto* gen = app.add_subcommand("gen-trace", "synthesize a trace CSV");
    gen->add_option("--config", config_path, "scenario config file")->required();
    gen->add_option("--out", trace_out, "output CSV path")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 1;
    }

    try {
        if (app.got_subcommand(run)) return cmd_run(config_path, seed, strategy, out_dir);
        if (app.got_subcommand(cmp))
            return cmd_compare(config_path, seeds_spec, strategies_spec, out_dir);
        if (app.got_subcommand(gen)) return cmd_gen_trace(config_path, trace_out);
    } catch (const ConfigError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
    return 1;
}
