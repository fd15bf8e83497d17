#pragma once

#include <vector>

#include "sta/core.hpp"

namespace sta {

enum class OperatorKind { Rotation, Translation, Expansion, Axesion };

struct CandidateSet {
    std::vector<StateVector> candidates;

    bool empty() const { return candidates.empty(); }
    std::size_t size() const { return candidates.size(); }
    auto begin() const { return candidates.begin(); }
    auto end() const { return candidates.end(); }
};

/// se candidates x + alpha/(n*||x||) * R * x with R an n-by-n matrix of
/// uniform [-1,1] entries. Every candidate lies within distance alpha of x.
/// If ||x|| is zero the operator has no effect and copies of x are returned.
CandidateSet rotate_candidates(const StateVector& x, double alpha, int se, RngStream& rng);

/// se candidates on the ray from x_old through x_new, at distance
/// beta * r from x_new with scalar r uniform in [0,1). Returns an empty set
/// when x_new == x_old.
CandidateSet translate_candidates(const StateVector& x_new, const StateVector& x_old,
                                  double beta, int se, RngStream& rng);

/// se candidates x_i * (1 + gamma * g_i) with g_i iid standard normal.
CandidateSet expand_candidates(const StateVector& x, double gamma, int se, RngStream& rng);

/// se candidates copying x except one uniformly chosen coordinate j, which
/// becomes x_j * (1 + delta * g) with g standard normal.
CandidateSet axes_candidates(const StateVector& x, double delta, int se, RngStream& rng);

void clip_candidates(CandidateSet& set, const BoxBounds& b);

struct Selection {
    EvaluatedState best;
    bool improved = false;
};

/// Evaluates every candidate and keeps the incumbent unless some candidate
/// is strictly better. Ties go to the incumbent; among equally good
/// candidates the lowest index wins. The incumbent's cached fitness is
/// trusted, not recomputed.
Selection greedy_select(const Objective& obj, const EvaluatedState& incumbent,
                        const CandidateSet& set, EvalCounter& counter);

/// One operator application round: generate candidates (rotation, expansion
/// or axesion), clip when requested, select greedily, and on improvement run
/// one translation round from the new best. Consumes exactly p.se
/// evaluations, or 2 * p.se when the translation round fires.
EvaluatedState transform_round(const Objective& obj, const EvaluatedState& best,
                               OperatorKind kind, const StaParams& p, RngStream& rng,
                               EvalCounter& counter, BoundsPolicy policy);

} // namespace sta
