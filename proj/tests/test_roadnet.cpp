#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "father/roadnet.hpp"

using namespace father;

TEST_CASE("generate_events with rate 0 yields empty list") {
    EventGenParams params;
    params.rate_per_hour = 0.0;
    Rng rng = make_rng(1, "events");
    CHECK(generate_events(params, 3600.0, rng).empty());
}

TEST_CASE("generate_events mean count matches rate") {
    EventGenParams params;
    params.rate_per_hour = 6.0;
    params.sign_lead = 30.0;
    long total = 0;
    for (std::uint64_t seed = 0; seed < 1000; ++seed) {
        Rng rng = make_rng(seed, "events");
        total += static_cast<long>(generate_events(params, 3600.0, rng).size());
    }
    double mean = total / 1000.0;
    CHECK(mean > 5.8);
    CHECK(mean < 6.2);
}

TEST_CASE("generated events respect lead and horizon bounds") {
    EventGenParams params;
    params.rate_per_hour = 30.0;
    params.sign_lead = 30.0;
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        Rng rng = make_rng(seed, "events");
        auto events = generate_events(params, 3600.0, rng);
        double prev = -1.0;
        for (const auto& ev : events) {
            CHECK(ev.onset >= ev.sign_lead);
            CHECK(ev.onset + ev.duration <= 3600.0);
            CHECK(ev.onset >= prev);  // sorted
            prev = ev.onset;
        }
    }
}

TEST_CASE("event generation is reproducible for a fixed seed") {
    EventGenParams params;
    params.rate_per_hour = 12.0;
    Rng r1 = make_rng(77, "events");
    Rng r2 = make_rng(77, "events");
    auto a = generate_events(params, 3600.0, r1);
    auto b = generate_events(params, 3600.0, r2);
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        CHECK(a[i].onset == b[i].onset);
        CHECK(a[i].peak_accel == b[i].peak_accel);
        CHECK(a[i].kind == b[i].kind);
    }
}

TEST_CASE("signage emits one message per event, lead applied") {
    RoadEvent ev;
    ev.id = 0;
    ev.onset = 100.0;
    ev.duration = 3.0;
    ev.sign_lead = 30.0;
    auto msgs = signage({ev});
    REQUIRE(msgs.size() == 1);
    CHECK(msgs[0].sent_at == doctest::Approx(70.0));
    CHECK(msgs[0].hazard.start == doctest::Approx(100.0));
    CHECK(msgs[0].hazard.end == doctest::Approx(103.0));

    ev.sign_lead = 0.0;
    CHECK(signage({ev})[0].sent_at == doctest::Approx(100.0));

    CHECK(signage({}).empty());
}

TEST_CASE("transmit: certain loss and lossless delivery") {
    CitsMessage msg;
    msg.sent_at = 10.0;
    Rng rng = make_rng(1, "channel");

    ChannelModel sure_loss{0.05, 0.0, 1.0};
    CHECK(transmit(msg, sure_loss, rng).lost);

    ChannelModel clean{0.05, 0.0, 0.0};
    auto d = transmit(msg, clean, rng);
    CHECK_FALSE(d.lost);
    CHECK(d.arrival == doctest::Approx(10.05));
}

TEST_CASE("transmit loss fraction and delay statistics") {
    CitsMessage msg;
    msg.sent_at = 0.0;
    ChannelModel ch{0.05, 0.02, 0.1};
    Rng rng = make_rng(9, "channel");
    int lost = 0;
    double delay_sum = 0.0;
    int arrived = 0;
    const int n = 10000;
    for (int i = 0; i < n; ++i) {
        auto d = transmit(msg, ch, rng);
        if (d.lost) {
            ++lost;
        } else {
            ++arrived;
            delay_sum += d.arrival - msg.sent_at;
        }
    }
    CHECK(lost / static_cast<double>(n) == doctest::Approx(0.1).epsilon(0.1));
    double mean_delay = delay_sum / arrived;
    CHECK(mean_delay == doctest::Approx(0.05 + 0.02 / 2.0).epsilon(0.05));
}

TEST_CASE("no delivery precedes send time plus base latency") {
    ChannelModel ch{0.05, 0.1, 0.3};
    Rng rng = make_rng(4, "channel");
    CitsMessage msg;
    msg.sent_at = 42.0;
    for (int i = 0; i < 1000; ++i) {
        auto d = transmit(msg, ch, rng);
        if (!d.lost) CHECK(d.arrival >= msg.sent_at + ch.base_latency);
    }
}
