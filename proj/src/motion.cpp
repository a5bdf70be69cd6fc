#include "father/motion.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace father {

namespace {

double parse_field(const std::string& s, int row, const char* name) {
    std::size_t pos = 0;
    double v = 0.0;
    try {
        v = std::stod(s, &pos);
    } catch (const std::exception&) {
        throw std::runtime_error("load_trace: non-numeric " + std::string(name) +
                                 " at row " + std::to_string(row));
    }
    if (pos != s.size())
        throw std::runtime_error("load_trace: non-numeric " + std::string(name) +
                                 " at row " + std::to_string(row));
    if (!std::isfinite(v))
        throw std::runtime_error("load_trace: non-finite " + std::string(name) +
                                 " at row " + std::to_string(row));
    return v;
}

}  // namespace

AccelTrace load_trace(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("load_trace: cannot open " + path);

    AccelTrace trace;
    std::string line;
    int row = 0;
    bool first_line = true;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        bool header = first_line && line.rfind("t,", 0) == 0;
        first_line = false;
        if (header) continue;
        ++row;
        std::stringstream ss(line);
        std::string f[4];
        for (int i = 0; i < 4; ++i) {
            if (!std::getline(ss, f[i], ','))
                throw std::runtime_error("load_trace: expected 4 fields at row " +
                                         std::to_string(row));
        }
        AccelSample s;
        s.t = parse_field(f[0], row, "t");
        s.a.x = parse_field(f[1], row, "ax");
        s.a.y = parse_field(f[2], row, "ay");
        s.a.z = parse_field(f[3], row, "az");
        if (!trace.samples.empty() && s.t <= trace.samples.back().t)
            throw std::runtime_error("load_trace: non-monotonic at row " + std::to_string(row));
        trace.samples.push_back(s);
    }
    if (trace.samples.empty()) throw std::runtime_error("load_trace: empty trace");
    if (trace.samples.size() >= 2)
        trace.sample_period = trace.samples[1].t - trace.samples[0].t;
    return trace;
}

void save_trace(const AccelTrace& trace, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("save_trace: cannot write " + path);
    out << "t,ax,ay,az\n";
    char buf[160];
    for (const auto& s : trace.samples) {
        // max_digits10 so load(save(trace)) round-trips bit-exactly
        std::snprintf(buf, sizeof(buf), "%.17g,%.17g,%.17g,%.17g\n", s.t, s.a.x, s.a.y, s.a.z);
        out << buf;
    }
}

namespace {

// trapezoid: ramp 0.5 s, hold duration - 1 s, ramp 0.5 s
double pulse_value(const RoadEvent& ev, double t) {
    const double ramp = 0.5;
    double rel = t - ev.onset;
    if (rel < 0.0 || rel > ev.duration) return 0.0;
    if (rel < ramp) return ev.peak_accel * rel / ramp;
    if (rel > ev.duration - ramp) return ev.peak_accel * (ev.duration - rel) / ramp;
    return ev.peak_accel;
}

}  // namespace

AccelTrace synth_trace(const std::vector<RoadEvent>& events, Duration horizon,
                       double noise_rms, Rng& rng) {
    if (horizon <= 0.0) throw std::invalid_argument("synth_trace: horizon must be > 0");
    for (const auto& ev : events) {
        if (ev.onset < 0.0 || ev.onset + ev.duration > horizon)
            throw std::invalid_argument("synth_trace: event " + std::to_string(ev.id) +
                                        " extends past horizon");
        if (ev.duration < 1.0)
            throw std::invalid_argument("synth_trace: event " + std::to_string(ev.id) +
                                        " shorter than ramp pair (1 s)");
    }

    const double dt = 0.01;
    std::normal_distribution<double> noise(0.0, noise_rms);
    AccelTrace trace;
    trace.sample_period = dt;
    auto n = static_cast<std::size_t>(std::floor(horizon / dt + 0.5));
    trace.samples.reserve(n + 1);
    for (std::size_t i = 0; i <= n; ++i) {
        AccelSample s;
        s.t = static_cast<double>(i) * dt;
        if (noise_rms > 0.0) {
            s.a.x = noise(rng);
            s.a.y = noise(rng);
            s.a.z = noise(rng);
        }
        for (const auto& ev : events) {
            double v = pulse_value(ev, s.t);
            if (ev.kind == HazardKind::emergency_brake)
                s.a.x += v;
            else
                s.a.y += v;
        }
        trace.samples.push_back(s);
    }
    return trace;
}

Vec3 accel_at(const AccelTrace& trace, TimePoint t) {
    if (trace.empty()) throw std::runtime_error("accel_at: empty trace");
    if (t < trace.first_t() || t > trace.last_t())
        throw std::out_of_range("accel_at: t beyond trace");
    // latest sample with sample.t <= t
    auto it = std::upper_bound(trace.samples.begin(), trace.samples.end(), t,
                               [](double v, const AccelSample& s) { return v < s.t; });
    return std::prev(it)->a;
}

double peak_magnitude(const AccelTrace& trace, Interval window) {
    if (trace.empty()) throw std::runtime_error("peak_magnitude: empty trace");
    if (window.start < trace.first_t() || window.end > trace.last_t())
        throw std::out_of_range("peak_magnitude: window beyond trace");
    auto lo = std::lower_bound(trace.samples.begin(), trace.samples.end(), window.start,
                               [](const AccelSample& s, double v) { return s.t < v; });
    double peak = -1.0;
    for (auto it = lo; it != trace.samples.end() && it->t <= window.end; ++it)
        peak = std::max(peak, it->a.lateral_mag());
    if (peak < 0.0) throw std::runtime_error("peak_magnitude: window covers no samples");
    return peak;
}

}  // namespace father
