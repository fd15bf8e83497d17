#include "sta/crossover.hpp"

#include <cmath>
#include <stdexcept>

namespace sta {
namespace {

void require_same_dim(const StateVector& a, const StateVector& b) {
    if (a.size() != b.size())
        throw std::invalid_argument("crossover: parent dimension mismatch");
}

} // namespace

std::pair<StateVector, StateVector>
crossover_proposed_masked(const StateVector& x1, const StateVector& x2,
                          const std::vector<int>& keep1, const std::vector<int>& keep2) {
    require_same_dim(x1, x2);
    if (keep1.size() != x1.size() || keep2.size() != x1.size())
        throw std::invalid_argument("crossover: mask dimension mismatch");
    StateVector y1(x1.size()), y2(x1.size());
    for (std::size_t i = 0; i < x1.size(); ++i) {
        y1[i] = keep1[i] ? x1[i] : x2[i];
        y2[i] = keep2[i] ? x1[i] : x2[i];
    }
    return {std::move(y1), std::move(y2)};
}

std::pair<StateVector, StateVector>
crossover_proposed(const StateVector& x1, const StateVector& x2, RngStream& rng) {
    require_same_dim(x1, x2);
    std::vector<int> keep1(x1.size()), keep2(x1.size());
    for (std::size_t i = 0; i < x1.size(); ++i) {
        keep1[i] = rng.uniform01() < 0.5 ? 1 : 0;
        keep2[i] = rng.uniform01() < 0.5 ? 1 : 0;
    }
    return crossover_proposed_masked(x1, x2, keep1, keep2);
}

std::pair<StateVector, StateVector>
crossover_arithmetical(const StateVector& x1, const StateVector& x2, double alpha_c) {
    require_same_dim(x1, x2);
    StateVector y1(x1.size()), y2(x1.size());
    for (std::size_t i = 0; i < x1.size(); ++i) {
        y1[i] = alpha_c * x1[i] + (1.0 - alpha_c) * x2[i];
        y2[i] = alpha_c * x2[i] + (1.0 - alpha_c) * x1[i];
    }
    return {std::move(y1), std::move(y2)};
}

std::array<StateVector, 3>
crossover_linear(const StateVector& x1, const StateVector& x2) {
    require_same_dim(x1, x2);
    StateVector a(x1.size()), b(x1.size()), c(x1.size());
    for (std::size_t i = 0; i < x1.size(); ++i) {
        a[i] = 1.5 * x1[i] - 0.5 * x2[i];
        b[i] = -0.5 * x1[i] + 1.5 * x2[i];
        c[i] = 0.5 * (x1[i] + x2[i]);
    }
    return {std::move(a), std::move(b), std::move(c)};
}

double sbx_beta_from_u(double u, double eta_c) {
    const double e = 1.0 / (eta_c + 1.0);
    if (u <= 0.5)
        return std::pow(2.0 * u, e);
    return std::pow(1.0 / (2.0 * (1.0 - u)), e);
}

double sbx_sample_beta(double eta_c, RngStream& rng) {
    // uniform01 never returns 1, so the upper branch stays finite
    return sbx_beta_from_u(rng.uniform01(), eta_c);
}

std::pair<StateVector, StateVector>
crossover_sbx(const StateVector& x1, const StateVector& x2, double eta_c, RngStream& rng) {
    require_same_dim(x1, x2);
    StateVector y1(x1.size()), y2(x1.size());
    for (std::size_t i = 0; i < x1.size(); ++i) {
        const double b = sbx_sample_beta(eta_c, rng);
        y1[i] = 0.5 * ((1.0 - b) * x1[i] + (1.0 + b) * x2[i]);
        y2[i] = 0.5 * ((1.0 + b) * x1[i] + (1.0 - b) * x2[i]);
    }
    return {std::move(y1), std::move(y2)};
}

std::vector<StateVector>
crossover_offspring(const StateVector& x1, const StateVector& x2,
                    const CrossoverConfig& cfg, RngStream& rng) {
    std::vector<StateVector> kids;
    switch (cfg.kind) {
    case CrossoverKind::Proposed: {
        auto [a, b] = crossover_proposed(x1, x2, rng);
        kids.push_back(std::move(a));
        kids.push_back(std::move(b));
        break;
    }
    case CrossoverKind::Arithmetical: {
        auto [a, b] = crossover_arithmetical(x1, x2, cfg.alpha_c);
        kids.push_back(std::move(a));
        kids.push_back(std::move(b));
        break;
    }
    case CrossoverKind::Linear: {
        auto three = crossover_linear(x1, x2);
        for (auto& k : three)
            kids.push_back(std::move(k));
        break;
    }
    case CrossoverKind::Sbx: {
        auto [a, b] = crossover_sbx(x1, x2, cfg.eta_c, rng);
        kids.push_back(std::move(a));
        kids.push_back(std::move(b));
        break;
    }
    }
    return kids;
}

} // namespace sta
