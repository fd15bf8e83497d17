#include "sta/sta2.hpp"

#include <algorithm>
#include <stdexcept>

namespace sta {

const EvaluatedState& Population::best() const {
    if (states.empty())
        throw std::logic_error("Population: empty");
    const EvaluatedState* b = &states[0];
    for (const auto& s : states)
        if (fitness_less(s.fitness, b->fitness))
            b = &s;
    return *b;
}

Population communicate(const Population& pop, const Objective& obj,
                       const CrossoverConfig& cross, RngStream& rng, EvalCounter& counter,
                       BoundsPolicy policy) {
    cross.validate();
    const std::size_t sn = pop.states.size();
    if (sn < 2)
        return pop;

    std::vector<EvaluatedState> all = pop.states;
    for (std::size_t i = 0; i < sn; ++i) {
        for (std::size_t j = i + 1; j < sn; ++j) {
            auto kids = crossover_offspring(pop.states[i].state, pop.states[j].state, cross, rng);
            for (auto& kid : kids) {
                if (policy == BoundsPolicy::Clip)
                    clip_in_place(kid, obj.bounds);
                const double f = evaluate(obj, kid, counter);
                all.push_back({std::move(kid), f});
            }
        }
    }
    std::stable_sort(all.begin(), all.end(), [](const EvaluatedState& a, const EvaluatedState& b) {
        return fitness_less(a.fitness, b.fitness);
    });
    all.resize(sn);

    Population next;
    next.states = std::move(all);
    next.sn = pop.sn;
    next.cf = pop.cf;
    return next;
}

StaIIRun sta2_run(const Objective& obj, const StaParams& params, int sn, int cf,
                  int max_iters, std::uint64_t seed, BoundsPolicy policy,
                  const CrossoverConfig& cross) {
    params.validate();
    cross.validate();
    obj.bounds.validate();
    if (sn < 1)
        throw std::invalid_argument("sta2_run: sn must be >= 1");
    if (cf < 1)
        throw std::invalid_argument("sta2_run: cf must be >= 1");
    if (max_iters < 1)
        throw std::invalid_argument("sta2_run: max_iters must be >= 1");

    RngStream rng(seed);
    StaIIRun run;
    run.params = params;
    run.params.alpha = params.alpha_max;
    run.sn = sn;
    run.cf = cf;
    run.max_iters = max_iters;
    run.history.reserve(static_cast<std::size_t>(max_iters));
    run.pop.sn = sn;
    run.pop.cf = cf;
    run.pop.states.reserve(static_cast<std::size_t>(sn));
    for (int s = 0; s < sn; ++s) {
        StateVector x = sample_uniform_in_bounds(obj.bounds, rng);
        const double f = evaluate(obj, x, run.counter);
        run.pop.states.push_back({std::move(x), f});
    }

    for (int iter = 1; iter <= max_iters; ++iter) {
        run.params.alpha = alpha_reset(run.params.alpha, run.params);
        for (auto& st : run.pop.states)
            st = self_learning_step(obj, st, run.params, rng, run.counter, policy);
        run.params.alpha = alpha_next(run.params.alpha, run.params);
        if (iter % cf == 0)
            run.pop = communicate(run.pop, obj, cross, rng, run.counter, policy);
        run.history.push_back(run.pop.best().fitness);
    }
    run.best = run.pop.best();
    return run;
}

} // namespace sta
