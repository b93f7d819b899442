// Seedable randomness helpers shared by the sampler and the test suites.
#pragma once

#include <cstdint>
#include <random>
#include <stdexcept>

namespace ekr {

using Rng = std::mt19937_64;

constexpr std::uint64_t default_seed = 0x5eed2026;

// Unbiased draw from {0, ..., m-1} via rejection; avoids the
// implementation-defined behaviour of std::uniform_int_distribution.
inline std::uint64_t uniform_below(Rng& rng, std::uint64_t m) {
    if (m == 0) throw std::invalid_argument("uniform_below: empty range");
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % m;
    std::uint64_t v;
    do {
        v = rng();
    } while (v >= limit);
    return v % m;
}

}  // namespace ekr
