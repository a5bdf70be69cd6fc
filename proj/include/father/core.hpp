#pragma once
#include <cmath>
#include <cstdint>
#include <random>
#include <string_view>

namespace father {

// Time base: seconds since simulation start. x = direction of travel,
// y = lateral, z = vertical; accelerations in m/s^2 throughout.
using TimePoint = double;
using Duration = double;

struct Interval {
    double start = 0.0;
    double end = 0.0;
    double length() const { return end - start; }
    // half-open [start, end)
    bool contains(double t) const { return t >= start && t < end; }
    bool overlaps(double a, double b) const { return a < end && b > start; }
};

struct Vec3 {
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;
    // gravity/vertical excluded: only maneuvering accelerations threaten grasps
    double lateral_mag() const { return std::hypot(x, y); }
};

using Rng = std::mt19937_64;

// Independent deterministic stream per (seed, label). Streams for different
// labels never share state, so consuming one subsystem's stream does not
// perturb another's draws.
Rng make_rng(std::uint64_t seed, std::string_view label);

}  // namespace father
