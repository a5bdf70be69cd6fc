#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "father/disturbance.hpp"

using namespace father;

namespace {

PartState held_part(int id = 0) {
    PartState p;
    p.part_id = id;
    p.loc = Location::held;
    p.arm = 0;
    return p;
}

AccelTrace constant_trace(double ax, double horizon = 20.0) {
    AccelTrace t;
    for (int i = 0; i <= static_cast<int>(horizon * 10); ++i)
        t.samples.push_back({i * 0.1, {ax, 0.0, 0.0}});
    return t;
}

}  // namespace

TEST_CASE("below slip threshold nothing happens") {
    std::vector<PartState> parts{held_part()};
    std::vector<Incident> incidents;
    DisturbanceParams params;
    apply_accel(parts, 1.0, 5.0, params, 0.0, incidents);
    CHECK(parts[0].pose_error == 0.0);
    CHECK(parts[0].loc == Location::held);
    CHECK(incidents.empty());
}

TEST_CASE("held part above drop threshold is dropped") {
    std::vector<PartState> parts{held_part()};
    std::vector<Incident> incidents;
    DisturbanceParams params;
    apply_accel(parts, 7.0, 0.01, params, 3.0, incidents);
    CHECK(parts[0].loc == Location::staging);
    REQUIRE(incidents.size() == 1);
    CHECK(incidents[0].kind == IncidentKind::drop);
    CHECK(incidents[0].t == doctest::Approx(3.0));
    CHECK(parts[0].pose_error == doctest::Approx(params.drop_pose_penalty));
}

TEST_CASE("on-tray unsecured part drifts by the stated law") {
    PartState p;
    p.part_id = 1;
    p.loc = Location::on_tray;
    std::vector<PartState> parts{p};
    std::vector<Incident> incidents;
    DisturbanceParams params;  // a_slip=2, k=0.01
    apply_accel(parts, 4.0, 2.0, params, 0.0, incidents);
    CHECK(parts[0].pose_error == doctest::Approx(0.04));
}

TEST_CASE("secured tray parts and binned parts are unaffected") {
    PartState tray;
    tray.loc = Location::on_tray;
    tray.secured = true;
    PartState bin;
    bin.loc = Location::in_bin;
    std::vector<PartState> parts{tray, bin};
    std::vector<Incident> incidents;
    DisturbanceParams params;
    apply_accel(parts, 7.0, 1.0, params, 0.0, incidents);
    CHECK(parts[0].pose_error == 0.0);
    CHECK(parts[1].pose_error == 0.0);
    CHECK(incidents.empty());
}

TEST_CASE("drop incidents occur only while held") {
    for (Location loc : {Location::in_bin, Location::on_tray, Location::staging}) {
        PartState p;
        p.loc = loc;
        std::vector<PartState> parts{p};
        std::vector<Incident> incidents;
        DisturbanceParams params;
        apply_accel(parts, 10.0, 0.1, params, 0.0, incidents);
        for (const auto& inc : incidents) CHECK(inc.kind != IncidentKind::drop);
    }
}

TEST_CASE("pose drift is monotone in acceleration magnitude") {
    DisturbanceParams params;
    double prev = -1.0;
    for (double a = 0.0; a <= 6.0; a += 0.5) {
        std::vector<PartState> parts{held_part()};
        std::vector<Incident> incidents;
        apply_accel(parts, a, 1.0, params, 0.0, incidents);
        if (parts[0].loc == Location::held) {
            CHECK(parts[0].pose_error >= prev);
            prev = parts[0].pose_error;
        }
    }
}

TEST_CASE("window_exposure classifies with inclusive-to-milder boundaries") {
    DisturbanceParams params;  // slip 2, drop 6

    CHECK(window_exposure(constant_trace(0.0), {0.0, 10.0}, params) == ExposureClass::safe);
    CHECK(window_exposure(constant_trace(2.0), {0.0, 10.0}, params) == ExposureClass::safe);
    CHECK(window_exposure(constant_trace(-6.0), {0.0, 10.0}, params) == ExposureClass::slip);
    CHECK(window_exposure(constant_trace(-6.5), {0.0, 10.0}, params) == ExposureClass::drop);
}

TEST_CASE("window_exposure on a synthesized brake") {
    Rng rng = make_rng(1, "noise");
    RoadEvent ev;
    ev.kind = HazardKind::emergency_brake;
    ev.onset = 10.0;
    ev.duration = 3.0;
    ev.peak_accel = -6.0;
    auto trace = synth_trace({ev}, 20.0, 0.0, rng);
    DisturbanceParams params;
    CHECK(window_exposure(trace, {10.0, 13.0}, params) == ExposureClass::slip);

    ev.peak_accel = -6.5;
    auto trace2 = synth_trace({ev}, 20.0, 0.0, rng);
    CHECK(window_exposure(trace2, {10.0, 13.0}, params) == ExposureClass::drop);
}
