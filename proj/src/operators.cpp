#include "sta/operators.hpp"

#include <stdexcept>

namespace sta {

CandidateSet rotate_candidates(const StateVector& x, double alpha, int se, RngStream& rng) {
    const std::size_t n = x.size();
    const double nx = norm2(x);
    CandidateSet set;
    set.candidates.reserve(static_cast<std::size_t>(se));
    if (nx == 0.0) {
        // the rotation matrix acts on the zero vector; no random draws needed
        for (int k = 0; k < se; ++k)
            set.candidates.push_back(x);
        return set;
    }
    const double scale = alpha / (static_cast<double>(n) * nx);
    StateVector c(n);
    for (int k = 0; k < se; ++k) {
        for (std::size_t i = 0; i < n; ++i) {
            double row = 0.0;
            for (std::size_t j = 0; j < n; ++j)
                row += rng.uniform_sym() * x[j];
            c[i] = x[i] + scale * row;
        }
        set.candidates.push_back(c);
    }
    return set;
}

CandidateSet translate_candidates(const StateVector& x_new, const StateVector& x_old,
                                  double beta, int se, RngStream& rng) {
    const std::size_t n = x_new.size();
    StateVector dir(n);
    double d2 = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        dir[i] = x_new[i] - x_old[i];
        d2 += dir[i] * dir[i];
    }
    CandidateSet set;
    if (d2 == 0.0)
        return set;
    const double inv = 1.0 / std::sqrt(d2);
    set.candidates.reserve(static_cast<std::size_t>(se));
    StateVector c(n);
    for (int k = 0; k < se; ++k) {
        const double step = beta * rng.uniform01() * inv;
        for (std::size_t i = 0; i < n; ++i)
            c[i] = x_new[i] + step * dir[i];
        set.candidates.push_back(c);
    }
    return set;
}

CandidateSet expand_candidates(const StateVector& x, double gamma, int se, RngStream& rng) {
    const std::size_t n = x.size();
    CandidateSet set;
    set.candidates.reserve(static_cast<std::size_t>(se));
    StateVector c(n);
    for (int k = 0; k < se; ++k) {
        for (std::size_t i = 0; i < n; ++i)
            c[i] = x[i] * (1.0 + gamma * rng.normal());
        set.candidates.push_back(c);
    }
    return set;
}

CandidateSet axes_candidates(const StateVector& x, double delta, int se, RngStream& rng) {
    const std::size_t n = x.size();
    CandidateSet set;
    set.candidates.reserve(static_cast<std::size_t>(se));
    for (int k = 0; k < se; ++k) {
        StateVector c = x;
        const std::size_t j = rng.uniform_index(n);
        c[j] = x[j] * (1.0 + delta * rng.normal());
        set.candidates.push_back(std::move(c));
    }
    return set;
}

void clip_candidates(CandidateSet& set, const BoxBounds& b) {
    for (auto& c : set.candidates)
        clip_in_place(c, b);
}

Selection greedy_select(const Objective& obj, const EvaluatedState& incumbent,
                        const CandidateSet& set, EvalCounter& counter) {
    if (set.empty())
        throw std::invalid_argument("greedy_select: empty candidate set");
    std::size_t best_i = 0;
    double best_f = evaluate(obj, set.candidates[0], counter);
    for (std::size_t i = 1; i < set.size(); ++i) {
        const double f = evaluate(obj, set.candidates[i], counter);
        if (fitness_less(f, best_f)) {
            best_f = f;
            best_i = i;
        }
    }
    if (fitness_less(best_f, incumbent.fitness))
        return {{set.candidates[best_i], best_f}, true};
    return {incumbent, false};
}

EvaluatedState transform_round(const Objective& obj, const EvaluatedState& best,
                               OperatorKind kind, const StaParams& p, RngStream& rng,
                               EvalCounter& counter, BoundsPolicy policy) {
    CandidateSet set;
    switch (kind) {
    case OperatorKind::Rotation:
        set = rotate_candidates(best.state, p.alpha, p.se, rng);
        break;
    case OperatorKind::Expansion:
        set = expand_candidates(best.state, p.gamma, p.se, rng);
        break;
    case OperatorKind::Axesion:
        set = axes_candidates(best.state, p.delta, p.se, rng);
        break;
    case OperatorKind::Translation:
        throw std::invalid_argument("transform_round: translation only follows an improvement");
    }
    if (policy == BoundsPolicy::Clip)
        clip_candidates(set, obj.bounds);
    Selection sel = greedy_select(obj, best, set, counter);
    if (!sel.improved)
        return best;

    CandidateSet tset = translate_candidates(sel.best.state, best.state, p.beta, p.se, rng);
    if (tset.empty())
        return sel.best;
    if (policy == BoundsPolicy::Clip)
        clip_candidates(tset, obj.bounds);
    return greedy_select(obj, sel.best, tset, counter).best;
}

} // namespace sta
