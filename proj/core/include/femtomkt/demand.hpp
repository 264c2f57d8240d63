// User-level and aggregate demand/payoff functions.
//
// Users have log utility ln(1 + theta*b) under macrocell service and
// ln(1 + b) under femtocell service, pay a linear price per unit bandwidth,
// and their spectrum efficiency theta is uniform on [0,1]. Everything here is
// a pure function; all solvers build on these.
#pragma once

namespace femtomkt {

// Optimal macrocell bandwidth demand of a user with efficiency theta at price
// price_macro: 1/p - 1/theta when p <= theta, 0 otherwise.
double macro_demand(double theta, double price_macro);

// The corresponding optimal payoff ln(theta/p) - 1 + p/theta (0 if unserved).
double macro_payoff(double theta, double price_macro);

// Optimal femtocell demand 1/p - 1 when p <= 1, 0 otherwise. Identical for
// all covered users (indoor service delivers maximum efficiency).
double femto_demand(double price_femto);

// Optimal femtocell payoff ln(1/p) - 1 + p (0 for p > 1).
double femto_payoff(double price_femto);

// Efficiency level at which a user is indifferent between the two services:
// p_M/p_F. Users below prefer femtocell, users at or above prefer macrocell.
// Requires 0 < price_macro <= price_femto.
double preferred_threshold(double price_macro, double price_femto);

// Total macrocell demand of users with theta in [theta_lo, 1]:
// (1 - theta_lo)/p + ln(theta_lo). Requires price_macro <= theta_lo <= 1;
// theta_lo below the price is a caller error, not silently clamped.
double aggregate_macro_demand(double price_macro, double theta_lo);

// Total preferred femtocell demand coverage * (p_M/p_F) * (1/p_F - 1).
double aggregate_femto_demand(double price_macro, double price_femto, double coverage);

}  // namespace femtomkt
