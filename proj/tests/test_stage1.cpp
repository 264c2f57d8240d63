#include <doctest.h>

#include <cmath>
#include <vector>

#include "femtomkt/bench_solver.hpp"
#include "femtomkt/demand.hpp"
#include "femtomkt/quadrature.hpp"
#include "femtomkt/stage1.hpp"
#include "femtomkt/stage2.hpp"

using namespace femtomkt;

TEST_CASE("preferred partition threshold") {
    CHECK(preferred_partition(0.3, 0.3) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(preferred_partition(0.2, 1.0 / 3.0) == doctest::Approx(1.0 / 3.0).epsilon(1e-12));
    CHECK(preferred_partition(0.5, 1.0) == doctest::Approx(0.5).epsilon(1e-12));
    CHECK_THROWS_AS(preferred_partition(0.4, 0.3), std::domain_error);
    // never exceeds the finalized threshold
    for (double pm : {0.1, 0.3, 0.6}) {
        for (double pf : {0.65, 0.8, 1.0}) {
            CHECK(preferred_partition(pm, pf) <= pm / pf + 1e-12);
        }
    }
}

TEST_CASE("no-lease profit at the clearing price reproduces the no-lease solver") {
    for (double capacity : {0.5, 1.1, 3.0}) {
        auto bench = solve_benchmark(capacity);
        MarketParams mkt{capacity, 0.0, 1.0};
        CHECK(macro_profit(bench.price, 0.0, mkt) ==
              doctest::Approx(bench.profit).epsilon(1e-12));
    }
}

TEST_CASE("operator revenue composes the lease and the served demand") {
    MarketParams mkt{4.0, 0.0, 1.0};
    // lease 1.2 at price 0.2, serve users above 0.6
    double expected = 0.2 * 1.2 + 0.2 * (0.4 / 0.2 + std::log(0.6));
    CHECK(macro_profit(0.2, 2.0, mkt) == doctest::Approx(expected).epsilon(1e-12));
}

TEST_CASE("coverage-weighted served demand matches quadrature") {
    MarketParams mkt{4.0, 0.0, 0.5};
    auto resp = femto_best_response(0.2, 2.0, 0.0, 0.5);
    double threshold = 0.2 / resp.decision.price_femto;
    QuadratureConfig quad;
    double covered =
        integrate([](double t) { return macro_demand(t, 0.2); }, threshold, 1.0, quad);
    double uncovered =
        integrate([](double t) { return macro_demand(t, 0.2); }, 0.2, 1.0, quad);
    double expected_demand = 0.5 * covered + 0.5 * uncovered;
    CHECK(macro_served_demand(0.2, 2.0, mkt) ==
          doctest::Approx(expected_demand).epsilon(1e-8));
    double expected_profit = 0.2 * resp.decision.band_leased + 0.2 * expected_demand;
    CHECK(macro_profit(0.2, 2.0, mkt) == doctest::Approx(expected_profit).epsilon(1e-8));
}

TEST_CASE("profit evaluation rejects an overloaded macrocell band") {
    MarketParams mkt{3.0, 0.0, 1.0};
    CHECK_THROWS_AS(macro_profit(0.2, 2.0, mkt), std::domain_error);
    MarketParams cost_mkt{3.0, 0.3, 1.0};
    CHECK_THROWS_AS(macro_profit(0.8, 1.0, cost_mkt), std::domain_error);
}

TEST_CASE("large capacity yields no leasing and the clearing outcome") {
    MarketParams mkt{6.0, 0.0, 1.0};
    auto eq = solve_stage1(mkt);
    auto bench = solve_benchmark(6.0);
    CHECK(eq.regime == Regime::MacroOnly);
    CHECK(eq.stage1.band_femto == 0.0);
    CHECK(eq.stage2.price_femto == 1.0);
    CHECK(eq.stage1.price_macro == bench.price);
    CHECK(eq.profit_macro == bench.profit);
    CHECK(eq.profit_femto == 0.0);
}

TEST_CASE("scarce capacity leases and lifts profit far above the no-lease outcome") {
    MarketParams mkt{0.1, 0.0, 1.0};
    auto eq = solve_stage1(mkt);
    auto bench = solve_benchmark(0.1);
    CHECK(eq.regime == Regime::DualService);
    double ratio = eq.profit_macro / bench.profit;
    CHECK(ratio > 1.2);
    CHECK(ratio < 1.35);
    CHECK(eq.stage2.price_femto > eq.stage1.price_macro);
}

TEST_CASE("equilibrium price dominates the no-lease price") {
    for (double capacity : {0.5, 1.0, 2.1, 3.0}) {
        MarketParams mkt{capacity, 0.0, 1.0};
        auto eq = solve_stage1(mkt);
        auto bench = solve_benchmark(capacity);
        CHECK(eq.stage1.price_macro >= bench.price - 1e-6);
        CHECK(eq.profit_macro >= bench.profit - 1e-9);
    }
}

TEST_CASE("macrocell band carries the served demand at equilibrium") {
    for (double capacity : {0.3, 1.1, 2.5, 4.0}) {
        MarketParams mkt{capacity, 0.0, 1.0};
        auto eq = solve_stage1(mkt);
        double demand =
            macro_served_demand(eq.stage1.price_macro, eq.stage1.band_femto, mkt);
        CHECK(demand <= capacity - eq.stage1.band_femto + 1e-8);
        // thresholds are consistently ordered
        CHECK(eq.theta_preferred_macro <= eq.theta_threshold + 1e-12);
        CHECK(eq.theta_threshold ==
              doctest::Approx(eq.stage1.price_macro / eq.stage2.price_femto)
                  .epsilon(1e-12));
    }
}

TEST_CASE("solver output is deterministic") {
    MarketParams mkt{1.7, 0.0, 1.0};
    auto a = solve_stage1(mkt);
    auto b = solve_stage1(mkt);
    CHECK(a.stage1.price_macro == b.stage1.price_macro);
    CHECK(a.stage1.band_femto == b.stage1.band_femto);
    CHECK(a.profit_macro == b.profit_macro);
}

TEST_CASE("zero capacity is the trivial equilibrium") {
    MarketParams mkt{0.0, 0.0, 1.0};
    auto eq = solve_stage1(mkt);
    CHECK(eq.regime == Regime::MacroOnly);
    CHECK(eq.profit_macro == 0.0);
    CHECK(eq.profit_femto == 0.0);
}

TEST_CASE("configuration limits are enforced") {
    StageOneSolverConfig cfg;
    cfg.grid_n_price = 50;
    CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
    cfg = {};
    cfg.refine_shrink = 1.0;
    CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
    cfg = {};
    cfg.refine_rounds = 1;
    CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
    MarketParams bad{1.0, 0.2, 0.5};
    CHECK_THROWS_AS(solve_stage1(bad), std::domain_error);
}

TEST_CASE("boundary search validates its bracket") {
    CHECK_THROWS_AS(find_regime_boundary(0.0, 1.0, 0.5, 2.0, 0.01), std::domain_error);
    CHECK_THROWS_AS(find_regime_boundary(0.0, 1.0, 5.5, 7.0, 0.01), std::domain_error);
    CHECK_THROWS_AS(find_regime_boundary(0.0, 1.0, 2.0, 8.0, -1.0), std::domain_error);
}

TEST_CASE("solver invariants hold across the whole supported scenario space") {
    // Stress sweep: no exceptions, feasibility, benchmark dominance, price
    // ordering and threshold ordering everywhere.
    std::vector<MarketParams> scenarios;
    for (double capacity : {0.05, 0.3, 1.1, 2.4, 4.6, 5.1, 7.0}) {
        for (double cost : {0.0, 0.06, 0.3, 0.6}) {
            scenarios.push_back({capacity, cost, 1.0});
        }
        for (double coverage : {0.15, 0.5, 0.85}) {
            scenarios.push_back({capacity, 0.0, coverage});
        }
    }
    for (const auto& mkt : scenarios) {
        CAPTURE(mkt.capacity);
        CAPTURE(mkt.cost);
        CAPTURE(mkt.coverage);
        auto eq = solve_stage1(mkt);
        auto bench = solve_benchmark(mkt.capacity);
        CHECK(eq.profit_macro >= bench.profit - 1e-9);
        CHECK(eq.profit_femto >= -1e-12);
        CHECK(eq.stage1.band_femto >= 0.0);
        CHECK(eq.stage1.band_femto <= mkt.capacity);
        CHECK(eq.stage2.band_leased <= eq.stage1.band_femto + 1e-12);
        CHECK(eq.theta_preferred_macro <= eq.theta_threshold + 1e-12);
        if (eq.regime == Regime::DualService) {
            CHECK(eq.stage2.price_femto > eq.stage1.price_macro);
            double demand =
                macro_served_demand(eq.stage1.price_macro, eq.stage1.band_femto, mkt);
            CHECK(demand <= mkt.capacity - eq.stage1.band_femto + 1e-8);
        } else {
            CHECK(eq.stage1.price_macro == bench.price);
        }
    }
}

TEST_CASE("cost variant still defaults to the plain no-lease outcome at high cost") {
    // with the cost this high no dual candidate is viable at this capacity
    MarketParams mkt{1.1, 0.8, 1.0};
    auto eq = solve_stage1(mkt);
    auto bench = solve_benchmark(1.1);
    CHECK(eq.regime == Regime::MacroOnly);
    CHECK(eq.profit_macro == doctest::Approx(bench.profit).epsilon(1e-12));
}
