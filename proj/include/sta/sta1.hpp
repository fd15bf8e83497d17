#pragma once

#include <cstdint>
#include <vector>

#include "sta/operators.hpp"

namespace sta {

/// alpha decays by 1/fc each iteration and snaps back to alpha_max once it
/// falls below alpha_min, giving a periodic coarse-to-fine search radius.
inline double alpha_reset(double alpha, const StaParams& p) {
    return alpha < p.alpha_min ? p.alpha_max : alpha;
}

inline double alpha_next(double alpha, const StaParams& p) { return alpha / p.fc; }

/// One self-learning pass over a state: expansion, rotation and axesion
/// rounds in that order, each with its embedded translation on improvement.
EvaluatedState self_learning_step(const Objective& obj, const EvaluatedState& best,
                                  const StaParams& p, RngStream& rng, EvalCounter& counter,
                                  BoundsPolicy policy);

struct StaIRun {
    StaParams params;   // params.alpha holds the running radius
    int max_iters = 0;
    EvaluatedState best;
    std::vector<double> history;   // best fitness after each iteration
    EvalCounter counter;
};

/// Advances one iteration: reset alpha if below alpha_min, apply the three
/// operator rounds, decay alpha, append to history.
void sta1_iteration(StaIRun& run, const Objective& obj, RngStream& rng, BoundsPolicy policy);

StaIRun sta1_run(const Objective& obj, const StaParams& params, int max_iters,
                 std::uint64_t seed, BoundsPolicy policy = BoundsPolicy::Clip);

} // namespace sta
