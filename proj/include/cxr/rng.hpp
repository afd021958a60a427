#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>
#include <random>
#include <vector>

namespace cxr::rng {

// All randomness flows through these helpers so a seed fully determines every
// output. std::mt19937_64 has a standard-mandated sequence; the distributions
// in <random> do not, so we provide our own.

inline double uniform01(std::mt19937_64& gen) {
    return static_cast<double>(gen() >> 11) * 0x1.0p-53;
}

inline double uniform(std::mt19937_64& gen, double lo, double hi) {
    return lo + (hi - lo) * uniform01(gen);
}

/// Standard normal via Box-Muller; consumes exactly two draws per sample.
inline double normal(std::mt19937_64& gen) {
    double u1 = uniform01(gen);
    double u2 = uniform01(gen);
    while (u1 <= 0.0) u1 = uniform01(gen);
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

/// Integer in [0, n). n is always tiny next to 2^64 here, so modulo bias is
/// far below anything observable.
inline std::uint64_t below(std::mt19937_64& gen, std::uint64_t n) {
    return gen() % n;
}

/// Fisher-Yates shuffle. std::shuffle is implementation-defined; this is not.
template <typename T>
void shuffle(std::vector<T>& items, std::mt19937_64& gen) {
    for (std::size_t i = items.size(); i > 1; --i) {
        std::swap(items[i - 1], items[below(gen, i)]);
    }
}

}  // namespace cxr::rng
