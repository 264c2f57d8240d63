// Brute-force and Monte-Carlo verifiers for the closed forms.
//
// These depend only on the user-level demand primitives, never on the solver
// code they check, so agreement is evidence rather than tautology. The profit
// objective is re-derived here from first principles for the same reason.
#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace femtomkt {

struct GridArgmaxResult {
    double price_femto = 1.0;
    double band_leased = 0.0;
    double profit = 0.0;
    double price_cell = 0.0;  // grid resolution on the price axis
    double band_cell = 0.0;
};

// Exhaustive maximum of the femtocell profit over an n x n grid of
// (price, lease) pairs with price in (price_macro + cost, 1] and lease in
// [0, band_femto]. Deterministic; ties resolve to the first point scanned.
GridArgmaxResult grid_argmax_femto(double price_macro, double band_femto, double cost,
                                   double coverage, int n);

struct DemandSample {
    double femto_total = 0.0;
    double macro_total = 0.0;
    double femto_stderr = 0.0;  // standard error of the total estimate
    double macro_stderr = 0.0;
};

// Samples n_users efficiencies uniformly; covered users (an independent
// Bernoulli(coverage) draw) pick the payoff-maximizing service. Returns mean
// demand scaled to the unit population. Deterministic given the seed.
DemandSample monte_carlo_demand(double price_macro, double price_femto, double coverage,
                                int n_users, std::uint64_t seed);

struct OracleFailure {
    std::string check;     // which comparison failed
    std::string scenario;  // inputs, formatted
    double expected = 0.0;
    double got = 0.0;
};

struct OracleReport {
    double max_abs_deviation = 0.0;  // worst closed-form vs brute-force profit gap
    double max_price_cells = 0.0;    // worst price disagreement in grid cells
    double max_mc_sigmas = 0.0;      // worst Monte-Carlo z-score
    int samples = 0;
    std::uint64_t seed = 0;
    std::vector<OracleFailure> failures;

    bool ok() const { return failures.empty(); }
};

// Randomized sweep over base, cost and coverage scenarios. Each sample checks
// the closed-form best response against a grid argmax (price within one grid
// cell, profit within 1e-3) and the aggregate demand integrals against a
// Monte-Carlo estimate (within three standard errors). Failures are reported,
// not thrown.
OracleReport verify_all(int sample_count, std::uint64_t seed);

std::string format_report(const OracleReport& report);

}  // namespace femtomkt
