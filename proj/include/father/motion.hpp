#pragma once
#include <string>
#include <vector>

#include "father/core.hpp"
#include "father/roadnet.hpp"

namespace father {

struct AccelSample {
    TimePoint t = 0.0;
    Vec3 a;
};

// Trailer acceleration vs. time, replayed or synthesized. Immutable after
// construction; samples strictly increasing in t.
struct AccelTrace {
    std::vector<AccelSample> samples;
    double sample_period = 0.01;

    bool empty() const { return samples.empty(); }
    TimePoint first_t() const { return samples.front().t; }
    TimePoint last_t() const { return samples.back().t; }
};

// CSV format: header `t,ax,ay,az`, seconds and m/s^2, dot decimal separator.
AccelTrace load_trace(const std::string& path);
void save_trace(const AccelTrace& trace, const std::string& path);

// Zero-mean Gaussian vibration (per-axis sigma = noise_rms) plus, per event,
// a trapezoidal pulse on the event's axis: 0.5 s ramp up to peak_accel,
// hold for duration - 1 s, 0.5 s ramp down. Sample period 0.01 s.
AccelTrace synth_trace(const std::vector<RoadEvent>& events, Duration horizon,
                       double noise_rms, Rng& rng);

// Zero-order hold: value of the latest sample with sample.t <= t.
Vec3 accel_at(const AccelTrace& trace, TimePoint t);

// Max over samples in window of sqrt(ax^2 + ay^2); vertical excluded.
double peak_magnitude(const AccelTrace& trace, Interval window);

}  // namespace father
