// Macrocell operator's optimization over (price, leased band), anticipating
// the femtocell best response, plus capacity-regime boundary search.
#pragma once

#include "femtomkt/market.hpp"

namespace femtomkt {

struct StageOneSolverConfig {
    int grid_n_price = 200;       // coarse grid points on the price axis
    int grid_n_band = 200;        // grid points on the lease axis per price
    int refine_rounds = 4;        // local refinement passes around the incumbent
    double refine_shrink = 0.2;   // window shrink factor per refinement round
    double feasibility_tol = 1e-9;
    double convergence_tol = 1e-7;   // max profit improvement allowed in the last round
    double regime_band_tol = 1e-4;   // band below this classifies as MacroOnly

    // Dual-service candidates are restricted to leases serving at least this
    // fraction of the femtocell operator's unconstrained demand. Without the
    // restriction the continuum model admits a degenerate family of vanishing
    // leases (band -> 0 with the femtocell price pushed toward 1) whose profit
    // edge over the no-lease outcome never quite closes, which would erase the
    // large-capacity regime entirely. Leases below the floor are not what the
    // leasing question is about: the femtocell side would be starved into a
    // price-taking sliver of the market.
    double lease_floor_frac = 0.8;

    void validate() const;  // throws std::invalid_argument on bad settings
};

// Preferred partition threshold from the macrocell operator's perspective:
// 1 / (1/p_M - 1/p_F + 1). Always <= p_M/p_F, with equality iff p_F = 1 or
// p_F = p_M.
double preferred_partition(double price_macro, double price_femto);

// Macrocell-served demand given the femtocell best response to (p_M, B_F):
// users above theta_th = p_M/p_F* buy macrocell service; with partial
// coverage the unreachable (1 - eta) slice buys macrocell whenever
// theta >= p_M.
double macro_served_demand(double price_macro, double band_femto,
                           const MarketParams& params);

// Operator revenue p_M * B_R* + p_M * (macrocell-served demand). Throws
// std::domain_error when the macrocell band B - B_F cannot carry the served
// demand, or when the price violates its bound (p_M <= 1 - C whenever a
// positive band is leased; p_M <= 1 otherwise).
double macro_profit(double price_macro, double band_femto, const MarketParams& params,
                    double feasibility_tol = 1e-9);

// Full equilibrium of the three-stage game.
//
// The search space is the no-lease outcome (exactly the capacity-clearing
// price of the macrocell-only market) plus, for each candidate price, leases
// between lease_floor_frac and 1 times the femtocell's unconstrained demand.
// A coarse scan is followed by refine_rounds of window refinement around the
// incumbent; every pass also probes the two structural candidates for each
// price, the demand-satisfying lease and the largest capacity-feasible lease.
// Ties are broken toward the smallest band, then the smallest price.
//
// Throws SolverError if the final refinement round still improves the profit
// by more than convergence_tol.
Equilibrium solve_stage1(const MarketParams& params, const StageOneSolverConfig& cfg = {});

// Smallest capacity (within tol) at which the equilibrium stops leasing,
// located by bisection on the regime flag. Requires solve_stage1 to report
// DualService at capacity_lo and MacroOnly at capacity_hi; otherwise throws
// std::domain_error (invalid bracket).
double find_regime_boundary(double cost, double coverage, double capacity_lo,
                            double capacity_hi, double tol,
                            const StageOneSolverConfig& cfg = {});

}  // namespace femtomkt
