#include <doctest.h>

#include <cmath>
#include <stdexcept>
#include <random>

#include "femtomkt/demand.hpp"
#include "femtomkt/oracle.hpp"

using namespace femtomkt;

TEST_CASE("grid argmax finds the known optimum of the base scenario") {
    auto r = grid_argmax_femto(0.2, 2.0, 0.0, 1.0, 2000);
    CHECK(std::abs(r.price_femto - 1.0 / 3.0) <= r.price_cell + 1e-12);
    CHECK(r.profit == doctest::Approx(0.16).epsilon(1e-6));
}

TEST_CASE("grid argmax with zero band stays at no trade") {
    auto r = grid_argmax_femto(0.5, 0.0, 0.0, 1.0, 1000);
    CHECK(r.band_leased == 0.0);
    CHECK(r.profit == 0.0);
}

TEST_CASE("grid argmax tracks the cost-shifted optimum") {
    auto r = grid_argmax_femto(0.2, 2.0, 0.1, 1.0, 2000);
    CHECK(std::abs(r.price_femto - 2.0 / (1.0 + 1.0 / 0.3)) <= r.price_cell + 1e-12);
}

TEST_CASE("grid argmax rejects impossible scenarios") {
    CHECK_THROWS_AS(grid_argmax_femto(0.7, 1.0, 0.3, 1.0, 1000), std::domain_error);
    CHECK_THROWS_AS(grid_argmax_femto(0.2, 1.0, 0.0, 1.0, 1), std::domain_error);
}

TEST_CASE("monte carlo demand is zero at price one") {
    auto s = monte_carlo_demand(1.0, 1.0, 1.0, 10000, 42);
    CHECK(s.femto_total == 0.0);
    CHECK(s.macro_total == 0.0);
}

TEST_CASE("monte carlo reproduces the macrocell demand integral") {
    auto s = monte_carlo_demand(0.5, 1.0, 1.0, 1000000, 1234);
    double exact = aggregate_macro_demand(0.5, 0.5);
    CHECK(std::abs(s.macro_total - exact) < 3.0 * s.macro_stderr);
    CHECK(s.macro_total == doctest::Approx(exact).epsilon(0.01));
}

TEST_CASE("monte carlo reproduces the femtocell demand integral") {
    auto s = monte_carlo_demand(0.2, 1.0 / 3.0, 1.0, 1000000, 99);
    double exact = aggregate_femto_demand(0.2, 1.0 / 3.0, 1.0);
    CHECK(std::abs(s.femto_total - exact) < 3.0 * s.femto_stderr);
}

TEST_CASE("monte carlo is deterministic per seed") {
    auto a = monte_carlo_demand(0.3, 0.6, 0.7, 50000, 7);
    auto b = monte_carlo_demand(0.3, 0.6, 0.7, 50000, 7);
    CHECK(a.femto_total == b.femto_total);
    CHECK(a.macro_total == b.macro_total);
    CHECK_THROWS_AS(monte_carlo_demand(0.3, 0.6, 0.7, 100, 7), std::domain_error);
}

TEST_CASE("min-branches nearly meet at interior grid optima") {
    // Wherever the brute-force optimum leases strictly less than the band,
    // the sold quantity should sit at the crossing of the two profit
    // branches; allow two lease cells' worth of slack.
    std::mt19937_64 rng(13);
    auto unit = [&rng] { return static_cast<double>(rng() >> 11) * 0x1.0p-53; };
    for (int k = 0; k < 25; ++k) {
        double pm = 0.1 + 0.6 * unit();
        double bf = 0.5 + 2.0 * unit();
        auto r = grid_argmax_femto(pm, bf, 0.0, 1.0, 500);
        if (r.band_leased <= 0.0 || r.band_leased >= bf - r.band_cell) continue;
        double preferred = (pm / r.price_femto) * femto_demand(r.price_femto);
        double branch_gap = (r.price_femto) * std::abs(r.band_leased - preferred);
        CHECK(branch_gap <= 2.0 * r.band_cell * r.price_femto + 1e-12);
    }
}

TEST_CASE("verification sweep passes and is seed-stable in its verdict") {
    auto empty = verify_all(0, 1);
    CHECK(empty.ok());
    CHECK(empty.samples == 0);

    auto r1 = verify_all(60, 1);
    CHECK(r1.ok());
    CHECK(r1.max_abs_deviation < 1e-3);
    CHECK(r1.max_price_cells <= 1.0 + 1e-9);

    auto r2 = verify_all(60, 2);
    CHECK(r2.ok() == r1.ok());
}
