#pragma once

#include <cstdint>
#include <vector>

#include "sta/core.hpp"

namespace sta {

struct RoRun {
    EvaluatedState initial;
    EvaluatedState best;
    std::vector<double> history;
    EvalCounter counter;
};

/// Basic random optimization: Gaussian perturbation of the incumbent,
/// accepted only on strict improvement. Consumes max_iters + 1 evaluations.
RoRun random_optimization_run(const Objective& obj, int max_iters, double step_sigma,
                              std::uint64_t seed, BoundsPolicy policy = BoundsPolicy::Clip);

} // namespace sta
