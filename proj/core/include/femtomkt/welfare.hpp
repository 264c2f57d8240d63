// Consumer surplus, social welfare, and per-user payoff comparisons against
// the macrocell-only outcome.
#pragma once

#include <span>
#include <vector>

#include "femtomkt/market.hpp"
#include "femtomkt/quadrature.hpp"

namespace femtomkt {

// Aggregate payoff of all users at the capacity-clearing macrocell-only price.
double consumer_surplus_benchmark(double capacity, const QuadratureConfig& cfg = {});

// Aggregate payoff under a dual-service equilibrium. Covered users below the
// partition threshold earn the femtocell payoff, everyone else the macrocell
// payoff at the equilibrium price; uncovered users with theta below the price
// contribute zero at weight (1 - coverage).
double consumer_surplus_dual(const Equilibrium& eq, const MarketParams& params,
                             const QuadratureConfig& cfg = {});

// Consumer surplus plus both operators' profits. The payoff_curve field holds
// per-theta dual-service payoffs on a uniform grid.
WelfareReport social_welfare(const Equilibrium& eq, const MarketParams& params,
                             const QuadratureConfig& cfg = {});

struct PayoffComparison {
    double theta = 0.0;
    double payoff_dual = 0.0;
    double payoff_benchmark = 0.0;
};

// Per-theta optimal payoff under the dual-service prices (covered users take
// the better of the two services) and under the macrocell-only price for the
// same capacity.
std::vector<PayoffComparison> payoff_curve(const Equilibrium& eq, const MarketParams& params,
                                           std::span<const double> theta_grid);

}  // namespace femtomkt
