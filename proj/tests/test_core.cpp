#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "father/config.hpp"
#include "father/core.hpp"

using namespace father;

TEST_CASE("make_rng is deterministic per (seed, label)") {
    Rng a = make_rng(42, "channel");
    Rng b = make_rng(42, "channel");
    for (int i = 0; i < 100; ++i) CHECK(a() == b());
}

TEST_CASE("streams with different labels are independent") {
    Rng a = make_rng(42, "channel");
    Rng b = make_rng(42, "events");
    int differing = 0;
    for (int i = 0; i < 100; ++i)
        if (a() != b()) ++differing;
    CHECK(differing == 100);
}

TEST_CASE("different seeds give different streams") {
    Rng a = make_rng(42, "channel");
    Rng b = make_rng(43, "channel");
    int differing = 0;
    for (int i = 0; i < 100; ++i)
        if (a() != b()) ++differing;
    CHECK(differing == 100);
}

TEST_CASE("consuming one stream does not perturb another") {
    Rng a1 = make_rng(7, "disturbance");
    std::vector<std::uint64_t> baseline;
    for (int i = 0; i < 50; ++i) baseline.push_back(a1());

    Rng a2 = make_rng(7, "disturbance");
    Rng other = make_rng(7, "channel");
    for (int i = 0; i < 1000; ++i) other();  // interleaved consumption
    for (int i = 0; i < 50; ++i) CHECK(a2() == baseline[i]);
}

TEST_CASE("minimal config fills documented defaults") {
    auto cfg = config_from_json_text(
        R"({"strategy":"static","order":{"shipments":1,"parts_per_shipment":6}})");
    CHECK(cfg.strategy == Strategy::static_);
    CHECK(cfg.order.part_count() == 6);
    CHECK(cfg.channel.base_latency == doctest::Approx(0.05));
    CHECK(cfg.disturbance.a_slip == doctest::Approx(2.0));
    CHECK(cfg.disturbance.a_drop == doctest::Approx(6.0));
    CHECK(cfg.planner.margin == doctest::Approx(2.0));
    CHECK(cfg.arms.size() == 3);
    CHECK(cfg.arms[0].kind == ArmKind::industrial);
}

TEST_CASE("unknown strategy names the offending key") {
    try {
        config_from_json_text(R"({"strategy":"flying"})");
        FAIL("expected ConfigError");
    } catch (const ConfigError& e) {
        CHECK(std::string(e.what()).find("strategy") != std::string::npos);
    }
}

TEST_CASE("loss_prob out of range is rejected") {
    try {
        config_from_json_text(R"({"strategy":"static","channel":{"loss_prob":1.5}})");
        FAIL("expected ConfigError");
    } catch (const ConfigError& e) {
        CHECK(std::string(e.what()).find("loss_prob") != std::string::npos);
        CHECK(std::string(e.what()).find("[0,1]") != std::string::npos);
    }
}

TEST_CASE("negative duration is rejected with key name") {
    try {
        config_from_json_text(
            R"({"strategy":"static","arms":[{"name":"a","pick":-1,"transfer":8,"place":4}]})");
        FAIL("expected ConfigError");
    } catch (const ConfigError& e) {
        CHECK(std::string(e.what()).find("pick") != std::string::npos);
    }
}

TEST_CASE("config round-trips through serialization") {
    auto cfg = config_from_json_text(R"({
        "strategy":"replan_til","seed":9,
        "road_events":{"mode":"list","events":[
            {"kind":"emergency_brake","onset":85,"duration":3,"peak_accel":-6.5}]},
        "planner":{"til_mode":"conservative"}})");
    auto text = config_to_json_text(cfg);
    auto cfg2 = config_from_json_text(text);
    CHECK(config_to_json_text(cfg2) == text);
    CHECK(cfg2.strategy == Strategy::replan_til);
    CHECK(cfg2.road_events.events.size() == 1);
    CHECK(cfg2.planner.mode == TilMode::conservative);
}
