// CSV schema shared by the equilibrium and sweep commands.
#pragma once

#include <string>
#include <vector>

#include "femtomkt/market.hpp"

namespace femtomkt::cli {

inline constexpr const char* kCsvHeader =
    "B,C,eta,regime,p_M,p_F,B_F,B_M,B_R,theta_th,theta_tilde,profit_macro,"
    "profit_femto,cs_dual,cs_bench,welfare_dual,welfare_bench";

struct ResultRow {
    MarketParams params;
    Equilibrium eq;
    double cs_dual = 0.0;
    double cs_bench = 0.0;
    double welfare_dual = 0.0;
    double welfare_bench = 0.0;
};

// Solves one scenario end to end (equilibrium plus surplus accounting).
ResultRow solve_row(const MarketParams& params);

// Formats a number with 10 significant digits, locale-independent.
std::string format_number(double x);

// One newline-terminated CSV line; re-validates the equilibrium invariants
// and throws std::logic_error if any fails.
std::string to_csv(const ResultRow& row);

}  // namespace femtomkt::cli
