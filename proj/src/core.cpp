#include "father/core.hpp"

namespace father {

namespace {
std::uint64_t fnv1a(std::string_view s) {
    std::uint64_t h = 14695981039346656037ull;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}
}  // namespace

Rng make_rng(std::uint64_t seed, std::string_view label) {
    std::uint64_t lh = fnv1a(label);
    std::seed_seq seq{static_cast<std::uint32_t>(seed),
                      static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(lh),
                      static_cast<std::uint32_t>(lh >> 32)};
    return Rng(seq);
}

}  // namespace father
