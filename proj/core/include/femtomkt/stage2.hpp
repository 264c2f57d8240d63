// Femtocell operator's closed-form best response (price and lease quantity).
#pragma once

#include "femtomkt/market.hpp"

namespace femtomkt {

struct FemtoBestResponse {
    StageTwoDecision decision;
    FemtoBinding binding = FemtoBinding::CapacityLimited;
    double profit = 0.0;
};

// Femtocell operator's profit for an arbitrary (price, lease) pair, kept in
// the raw min(.,.) form so brute-force checks exercise it literally:
//   (p_F - C) * min(B_R, coverage * (p_M/p_F) * (1/p_F - 1)) - p_M * B_R.
// May be negative for bad decisions.
double femto_profit(double price_femto, double band_leased, double price_macro,
                    double cost, double coverage);

// Lease level equating the two min-branches of the profit above (supply equal
// to preferred demand): coverage * p_M * (1 - p_F) / p_F^2. The operational
// cost does not enter; it is accepted to mirror the best-response signature.
double interior_lease_curve(double price_femto, double price_macro, double cost,
                            double coverage);

// Profit-maximizing (p_F, B_R) given the macrocell decision.
//
//   p_F* = max( 2 / (1 + 1/(p_M + C)),
//               (-p_M*eta + sqrt((p_M*eta)^2 + 4*B_F*p_M*eta)) / (2*B_F) )
//   B_R* = min( eta * p_M * (1/(p_M + C)^2 - 1) / 4, B_F )
//
// with eta = coverage (cost and reduced coverage are mutually exclusive, so
// one expression covers base, cost and coverage variants). band_femto = 0
// yields the degenerate response p_F = 1, B_R = 0 with zero profit.
//
// Throws std::domain_error for invalid prices, for cost > 0 combined with
// coverage < 1 (unsupported combination), and for price_macro + cost >= 1
// (the femtocell price would have to exceed 1, so no user would subscribe).
FemtoBestResponse femto_best_response(double price_macro, double band_femto,
                                      double cost, double coverage);

}  // namespace femtomkt
