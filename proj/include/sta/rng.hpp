#pragma once

#include <cstdint>
#include <cmath>
#include <random>

namespace sta {

/// Seedable random stream. All draws are derived from raw engine words
/// through fixed arithmetic, so a given seed yields the same sequence on
/// every platform regardless of standard-library distribution internals.
class RngStream {
public:
    explicit RngStream(std::uint64_t seed) : seed_(seed), engine_(seed) {}

    std::uint64_t seed() const { return seed_; }

    /// Uniform on [0, 1).
    double uniform01() {
        return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
    }

    /// Uniform on [-1, 1).
    double uniform_sym() { return 2.0 * uniform01() - 1.0; }

    /// Uniform on [lo, hi).
    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

    /// Standard normal via Box-Muller (no cached spare, keeps the draw
    /// sequence a pure function of call order).
    double normal() {
        double u1 = uniform01();
        while (u1 <= 0.0)
            u1 = uniform01();
        const double u2 = uniform01();
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * M_PI * u2);
    }

    /// Uniform index in {0, ..., n-1}. Requires n >= 1.
    std::size_t uniform_index(std::size_t n) {
        std::size_t i = static_cast<std::size_t>(uniform01() * static_cast<double>(n));
        return i < n ? i : n - 1;
    }

private:
    std::uint64_t seed_;
    std::mt19937_64 engine_;
};

} // namespace sta
