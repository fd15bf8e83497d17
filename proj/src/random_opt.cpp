#include "sta/random_opt.hpp"

#include <stdexcept>

namespace sta {

RoRun random_optimization_run(const Objective& obj, int max_iters, double step_sigma,
                              std::uint64_t seed, BoundsPolicy policy) {
    obj.bounds.validate();
    if (max_iters < 1)
        throw std::invalid_argument("random_optimization_run: max_iters must be >= 1");
    if (!(step_sigma > 0.0))
        throw std::invalid_argument("random_optimization_run: step_sigma must be positive");

    RngStream rng(seed);
    RoRun run;
    run.history.reserve(static_cast<std::size_t>(max_iters));

    StateVector x = sample_uniform_in_bounds(obj.bounds, rng);
    run.initial = {x, evaluate(obj, x, run.counter)};
    run.best = run.initial;

    StateVector trial(x.size());
    for (int k = 1; k <= max_iters; ++k) {
        for (std::size_t i = 0; i < trial.size(); ++i)
            trial[i] = run.best.state[i] + step_sigma * rng.normal();
        if (policy == BoundsPolicy::Clip)
            clip_in_place(trial, obj.bounds);
        const double f = evaluate(obj, trial, run.counter);
        if (fitness_less(f, run.best.fitness))
            run.best = {trial, f};
        run.history.push_back(run.best.fitness);
    }
    return run;
}

} // namespace sta
