#include <doctest.h>

#include <cmath>
#include <vector>

#include "femtomkt/bench_solver.hpp"
#include "femtomkt/demand.hpp"
#include "femtomkt/stage1.hpp"
#include "femtomkt/welfare.hpp"

using namespace femtomkt;

namespace {

// Closed antiderivative of the macrocell payoff, used as a spot check on the
// adaptive quadrature: integral over [p, 1] is -ln p - 2 + 2p - p ln p.
double surplus_closed_form(double p) {
    return -std::log(p) - 2.0 + 2.0 * p - p * std::log(p);
}

// Heavyweight midpoint-rule reference.
double surplus_midpoint(double p, int n) {
    double total = 0.0;
    double width = (1.0 - p) / n;
    for (int i = 0; i < n; ++i) {
        total += macro_payoff(p + (i + 0.5) * width, p);
    }
    return total * width;
}

}  // namespace

TEST_CASE("no capacity, no surplus") {
    CHECK(consumer_surplus_benchmark(0.0) == 0.0);
}

TEST_CASE("no-lease surplus agrees with closed form and midpoint reference") {
    for (double capacity : {0.4, 1.0, 2.7}) {
        double cs = consumer_surplus_benchmark(capacity);
        double p = solve_benchmark(capacity).price;
        CHECK(std::abs(cs - surplus_closed_form(p)) < 1e-8);
    }
    double cs1 = consumer_surplus_benchmark(1.0);
    CHECK(std::abs(cs1 - surplus_midpoint(solve_benchmark(1.0).price, 1000000)) < 1e-6);
}

TEST_CASE("no-lease surplus grows with capacity") {
    double prev = -1.0;
    for (double capacity : {0.2, 0.6, 1.0, 2.0, 4.0, 8.0}) {
        double cs = consumer_surplus_benchmark(capacity);
        CHECK(cs > prev);
        prev = cs;
    }
}

TEST_CASE("dual surplus collapses to the no-lease surplus when leasing stops") {
    MarketParams mkt{6.0, 0.0, 1.0};
    auto eq = solve_stage1(mkt);
    REQUIRE(eq.regime == Regime::MacroOnly);
    CHECK(std::abs(consumer_surplus_dual(eq, mkt) - consumer_surplus_benchmark(6.0)) <
          1e-6);
}

TEST_CASE("dual service raises total surplus without operational cost") {
    MarketParams mkt{2.1, 0.0, 1.0};
    auto eq = solve_stage1(mkt);
    REQUIRE(eq.regime == Regime::DualService);
    CHECK(consumer_surplus_dual(eq, mkt) > consumer_surplus_benchmark(2.1));
}

TEST_CASE("high operational cost flips the surplus comparison") {
    MarketParams mkt{1.1, 0.4, 1.0};
    auto eq = solve_stage1(mkt);
    REQUIRE(eq.regime == Regime::DualService);
    CHECK(consumer_surplus_dual(eq, mkt) < consumer_surplus_benchmark(1.1));
}

TEST_CASE("welfare report adds up") {
    MarketParams mkt{1.1, 0.2, 1.0};
    auto eq = solve_stage1(mkt);
    auto report = social_welfare(eq, mkt);
    CHECK(std::abs(report.social_welfare - (report.consumer_surplus +
                                            report.profit_macro + report.profit_femto)) <
          2e-8);
    CHECK(report.profit_macro == eq.profit_macro);
    CHECK(!report.payoff_curve.empty());
}

TEST_CASE("welfare with leasing beats the no-lease welfare at low capacity") {
    MarketParams mkt{0.1, 0.0, 1.0};
    auto eq = solve_stage1(mkt);
    auto report = social_welfare(eq, mkt);
    double bench_welfare =
        consumer_surplus_benchmark(0.1) + solve_benchmark(0.1).profit;
    CHECK(report.social_welfare >= bench_welfare - 1e-9);
}

TEST_CASE("payoff curve: indifference at the threshold, gains below, losses at the top") {
    MarketParams mkt{2.1, 0.0, 1.0};
    auto eq = solve_stage1(mkt);
    REQUIRE(eq.regime == Regime::DualService);

    double rf = femto_payoff(eq.stage2.price_femto);
    double rm = macro_payoff(eq.theta_threshold, eq.stage1.price_macro);
    CHECK(std::abs(rf - rm) < 1e-9);

    std::vector<double> grid;
    for (int i = 1; i <= 1000; ++i) grid.push_back(i / 1000.0);
    auto curve = payoff_curve(eq, mkt, grid);
    REQUIRE(curve.size() == grid.size());

    CHECK(curve.front().payoff_dual > curve.front().payoff_benchmark);
    CHECK(curve.back().payoff_dual < curve.back().payoff_benchmark);
    int sign_changes = 0;
    double prev = curve.front().payoff_dual - curve.front().payoff_benchmark;
    for (const auto& c : curve) {
        double diff = c.payoff_dual - c.payoff_benchmark;
        if (diff * prev < 0.0) {
            ++sign_changes;
            CHECK(prev > 0.0);  // the single crossing goes positive -> negative
        }
        if (diff != 0.0) prev = diff;
    }
    CHECK(sign_changes <= 1);
}

TEST_CASE("profit is continuous across the regime boundary; surplus steps down") {
    // The leased band drops from its interior level to zero at the boundary,
    // so the equilibrium itself is not continuous there. Operator profit is
    // (both sides sit within a hair of the no-lease profit); consumer surplus
    // loses the femtocell users' payoff in one step.
    double boundary = find_regime_boundary(0.0, 1.0, 3.0, 6.0, 0.01);
    MarketParams below{boundary - 0.02, 0.0, 1.0};
    MarketParams above{boundary + 0.02, 0.0, 1.0};
    auto eq_below = solve_stage1(below);
    auto eq_above = solve_stage1(above);
    REQUIRE(eq_below.regime == Regime::DualService);
    REQUIRE(eq_above.regime == Regime::MacroOnly);
    CHECK(std::abs(eq_below.profit_macro - eq_above.profit_macro) < 0.05);
    double cs_below = consumer_surplus_dual(eq_below, below);
    double cs_above = consumer_surplus_dual(eq_above, above);
    CHECK(cs_below > cs_above);  // the step removes the femtocell payoffs
}
