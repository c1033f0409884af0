#pragma once

#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

namespace fer::detail {

// Pinned RNG helpers. std::shuffle / std::normal_distribution are
// implementation-defined, so everything that must reproduce byte-identical
// artifacts goes through these instead.

inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

// Uniform in [0, bound) via 128-bit multiply-shift.
inline std::uint64_t bounded_rand(std::mt19937_64& rng, std::uint64_t bound) {
    return static_cast<std::uint64_t>(
        (static_cast<unsigned __int128>(rng()) * static_cast<unsigned __int128>(bound)) >> 64);
}

// Uniform double in [0, 1) with 53-bit resolution.
inline double uniform01(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

// Box-Muller, one value per call (the pair's second half is intentionally
// discarded to keep the draw count predictable).
inline double gaussian(std::mt19937_64& rng) {
    double u1 = uniform01(rng);
    double u2 = uniform01(rng);
    if (u1 < 1e-300) u1 = 1e-300;
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * 3.141592653589793238462643383279502884 * u2);
}

template <typename T>
void deterministic_shuffle(std::vector<T>& items, std::mt19937_64& rng) {
    for (std::size_t i = items.size(); i > 1; --i) {
        const std::size_t j = static_cast<std::size_t>(bounded_rand(rng, i));
        std::swap(items[i - 1], items[j]);
    }
}

}  // namespace fer::detail
