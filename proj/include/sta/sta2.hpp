#pragma once

#include <cstdint>
#include <vector>

#include "sta/crossover.hpp"
#include "sta/sta1.hpp"

namespace sta {

struct Population {
    std::vector<EvaluatedState> states;
    int sn = 0;
    int cf = 0;

    const EvaluatedState& best() const;
};

/// Intermittent exchange: every unordered pair of states produces offspring
/// under the configured crossover, all offspring are evaluated, and the sn
/// best of parents plus offspring survive. Ties keep earlier entries
/// (parents first, then offspring in generation order). Populations with
/// fewer than two states pass through untouched.
Population communicate(const Population& pop, const Objective& obj,
                       const CrossoverConfig& cross, RngStream& rng, EvalCounter& counter,
                       BoundsPolicy policy);

struct StaIIRun {
    StaParams params;   // params.alpha holds the running radius
    int sn = 0;
    int cf = 0;
    int max_iters = 0;
    EvaluatedState best;
    std::vector<double> history;   // population-best fitness per iteration
    EvalCounter counter;
    Population pop;
};

/// Population engine: sn states self-learn independently each iteration
/// under a shared alpha schedule, exchanging information every cf
/// iterations. With sn=1 this reduces exactly to the single-state engine.
StaIIRun sta2_run(const Objective& obj, const StaParams& params, int sn, int cf,
                  int max_iters, std::uint64_t seed,
                  BoundsPolicy policy = BoundsPolicy::Clip,
                  const CrossoverConfig& cross = {});

} // namespace sta
