#pragma once

#include <cmath>
#include <cstdint>
#include <functional>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "sta/rng.hpp"

namespace sta {

using StateVector = std::vector<double>;

/// A state paired with its fitness so callers never re-evaluate an
/// already-scored point.
struct EvaluatedState {
    StateVector state;
    double fitness = std::numeric_limits<double>::quiet_NaN();
};

struct BoxBounds {
    StateVector lower;
    StateVector upper;

    std::size_t dim() const { return lower.size(); }

    void validate() const {
        if (lower.size() != upper.size())
            throw std::invalid_argument("BoxBounds: lower/upper size mismatch");
        if (lower.empty())
            throw std::invalid_argument("BoxBounds: empty bounds");
        for (std::size_t i = 0; i < lower.size(); ++i)
            if (!(lower[i] < upper[i]))
                throw std::invalid_argument("BoxBounds: lower must be strictly below upper");
    }

    /// Same [lo, hi] interval in every coordinate.
    static BoxBounds cube(double lo, double hi, std::size_t n) {
        BoxBounds b{StateVector(n, lo), StateVector(n, hi)};
        b.validate();
        return b;
    }
};

/// Search parameters. alpha is the running rotation radius; alpha_max and
/// alpha_min delimit its periodic decay cycle.
struct StaParams {
    int se = 30;            // candidates generated per transformation
    double alpha = 1.0;     // rotation radius (running value)
    double alpha_max = 1.0;
    double alpha_min = 1e-4;
    double beta = 1.0;      // translation step scale
    double gamma = 1.0;     // expansion scale
    double delta = 1.0;     // axesion scale
    double fc = 2.0;        // alpha decay divisor

    void validate() const {
        if (se < 1) throw std::invalid_argument("StaParams: se must be >= 1");
        if (!(alpha_min > 0.0) || alpha_min > alpha_max)
            throw std::invalid_argument("StaParams: need 0 < alpha_min <= alpha_max");
        if (alpha < alpha_min || alpha > alpha_max)
            throw std::invalid_argument("StaParams: alpha outside [alpha_min, alpha_max]");
        if (!(beta > 0.0) || !(gamma > 0.0) || !(delta > 0.0))
            throw std::invalid_argument("StaParams: beta/gamma/delta must be positive");
        if (!(fc > 1.0))
            throw std::invalid_argument("StaParams: fc must be > 1");
    }
};

/// Counts objective evaluations; the only place evaluations are tallied.
struct EvalCounter {
    std::uint64_t count = 0;
};

enum class BoundsPolicy { Clip, None };

struct Objective {
    std::string name;
    std::size_t dim = 0;
    BoxBounds bounds;
    std::optional<double> known_min;
    std::function<double(const StateVector&)> fn;
};

/// Orders fitness values with non-finite results ranked worst.
inline double fitness_key(double f) {
    return std::isfinite(f) ? f : std::numeric_limits<double>::infinity();
}

inline bool fitness_less(double a, double b) { return fitness_key(a) < fitness_key(b); }

inline double evaluate(const Objective& obj, const StateVector& x, EvalCounter& counter) {
    ++counter.count;
    return obj.fn(x);
}

inline void clip_in_place(StateVector& x, const BoxBounds& b) {
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (x[i] < b.lower[i]) x[i] = b.lower[i];
        else if (x[i] > b.upper[i]) x[i] = b.upper[i];
    }
}

inline StateVector clip_to_bounds(StateVector x, const BoxBounds& b) {
    clip_in_place(x, b);
    return x;
}

inline StateVector sample_uniform_in_bounds(const BoxBounds& b, RngStream& rng) {
    StateVector x(b.dim());
    for (std::size_t i = 0; i < x.size(); ++i)
        x[i] = rng.uniform(b.lower[i], b.upper[i]);
    return x;
}

inline double norm2(const StateVector& x) {
    double s = 0.0;
    for (double v : x) s += v * v;
    return std::sqrt(s);
}

} // namespace sta
