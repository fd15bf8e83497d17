#pragma once

#include <array>
#include <cstdint>
#include <utility>
#include <vector>

#include "sta/core.hpp"

namespace sta {

enum class CrossoverKind { Proposed, Arithmetical, Linear, Sbx };

struct CrossoverConfig {
    CrossoverKind kind = CrossoverKind::Proposed;
    double alpha_c = 0.5;   // mix weight of the arithmetical form
    double eta_c = 2.0;     // distribution index of the simulated binary form

    void validate() const {
        if (kind == CrossoverKind::Arithmetical && (alpha_c < 0.0 || alpha_c > 1.0))
            throw std::invalid_argument("CrossoverConfig: alpha_c must lie in [0,1]");
        if (kind == CrossoverKind::Sbx && !(eta_c > 0.0))
            throw std::invalid_argument("CrossoverConfig: eta_c must be positive");
    }
};

/// Component swap driven by explicit 0/1 masks; the random form draws the
/// masks as independent fair coin flips per component.
std::pair<StateVector, StateVector>
crossover_proposed_masked(const StateVector& x1, const StateVector& x2,
                          const std::vector<int>& keep1, const std::vector<int>& keep2);

std::pair<StateVector, StateVector>
crossover_proposed(const StateVector& x1, const StateVector& x2, RngStream& rng);

/// Y1 = a*X1 + (1-a)*X2, Y2 = a*X2 + (1-a)*X1.
std::pair<StateVector, StateVector>
crossover_arithmetical(const StateVector& x1, const StateVector& x2, double alpha_c);

/// Three children: 1.5*X1 - 0.5*X2, -0.5*X1 + 1.5*X2, (X1+X2)/2.
std::array<StateVector, 3>
crossover_linear(const StateVector& x1, const StateVector& x2);

/// Inverse CDF of the spread-factor density 0.5(eta+1)*b^eta on [0,1],
/// 0.5(eta+1)/b^(eta+2) beyond: u <= 0.5 maps into [0,1], u > 0.5 above it.
double sbx_beta_from_u(double u, double eta_c);

double sbx_sample_beta(double eta_c, RngStream& rng);

/// Per component: Y1 = 0.5[(1-b)X1 + (1+b)X2], Y2 = 0.5[(1+b)X1 + (1-b)X2]
/// with a fresh spread factor b for each component.
std::pair<StateVector, StateVector>
crossover_sbx(const StateVector& x1, const StateVector& x2, double eta_c, RngStream& rng);

/// Offspring of one parent pair under the configured kind, in a fixed order.
std::vector<StateVector>
crossover_offspring(const StateVector& x1, const StateVector& x2,
                    const CrossoverConfig& cfg, RngStream& rng);

} // namespace sta
