#pragma once

#include <cstdint>
#include <random>

namespace taxdist::detail {

// Uniform on [0, 1) from the top 53 bits; identical on every platform,
// unlike std::uniform_real_distribution.
inline double unit_uniform(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

inline std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound) {
    // Lemire's multiply-shift without the rejection step; bias < bound / 2^64.
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(rng()) * bound) >> 64);
}

} // namespace taxdist::detail
