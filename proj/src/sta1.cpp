#include "sta/sta1.hpp"

#include <stdexcept>

namespace sta {

EvaluatedState self_learning_step(const Objective& obj, const EvaluatedState& best,
                                  const StaParams& p, RngStream& rng, EvalCounter& counter,
                                  BoundsPolicy policy) {
    EvaluatedState cur = transform_round(obj, best, OperatorKind::Expansion, p, rng, counter, policy);
    cur = transform_round(obj, cur, OperatorKind::Rotation, p, rng, counter, policy);
    cur = transform_round(obj, cur, OperatorKind::Axesion, p, rng, counter, policy);
    return cur;
}

void sta1_iteration(StaIRun& run, const Objective& obj, RngStream& rng, BoundsPolicy policy) {
    run.params.alpha = alpha_reset(run.params.alpha, run.params);
    run.best = self_learning_step(obj, run.best, run.params, rng, run.counter, policy);
    run.params.alpha = alpha_next(run.params.alpha, run.params);
    run.history.push_back(run.best.fitness);
}

StaIRun sta1_run(const Objective& obj, const StaParams& params, int max_iters,
                 std::uint64_t seed, BoundsPolicy policy) {
    params.validate();
    obj.bounds.validate();
    if (max_iters < 1)
        throw std::invalid_argument("sta1_run: max_iters must be >= 1");

    RngStream rng(seed);
    StaIRun run;
    run.params = params;
    run.params.alpha = params.alpha_max;
    run.max_iters = max_iters;
    run.history.reserve(static_cast<std::size_t>(max_iters));

    StateVector x0 = sample_uniform_in_bounds(obj.bounds, rng);
    run.best = {x0, evaluate(obj, x0, run.counter)};

    for (int iter = 1; iter <= max_iters; ++iter)
        sta1_iteration(run, obj, rng, policy);
    return run;
}

} // namespace sta
