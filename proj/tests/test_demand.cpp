#include <doctest.h>

#include <cmath>
#include <stdexcept>
#include <random>

#include "femtomkt/demand.hpp"
#include "femtomkt/quadrature.hpp"

using namespace femtomkt;

namespace {
double canonical(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}
}  // namespace

TEST_CASE("macro demand at boundary, interior and unserved points") {
    CHECK(macro_demand(0.5, 0.5) == 0.0);
    CHECK(macro_demand(1.0, 0.5) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(macro_demand(0.3, 0.5) == 0.0);
    CHECK_THROWS_AS(macro_demand(-0.1, 0.5), std::domain_error);
    CHECK_THROWS_AS(macro_demand(1.5, 0.5), std::domain_error);
    CHECK_THROWS_AS(macro_demand(0.5, 0.0), std::domain_error);
    CHECK_THROWS_AS(macro_demand(0.5, std::nan("")), std::domain_error);
}

TEST_CASE("macro payoff values") {
    CHECK(macro_payoff(0.5, 0.5) == 0.0);
    CHECK(macro_payoff(1.0, 0.5) ==
          doctest::Approx(std::log(2.0) - 0.5).epsilon(1e-12));
    CHECK(macro_payoff(0.2, 0.5) == 0.0);
}

TEST_CASE("femto demand and payoff values") {
    CHECK(femto_demand(1.0) == 0.0);
    CHECK(femto_demand(0.5) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(femto_demand(1.2) == 0.0);
    CHECK(femto_payoff(1.0) == 0.0);
    CHECK(femto_payoff(0.5) == doctest::Approx(std::log(2.0) - 0.5).epsilon(1e-12));
    double inv_e = std::exp(-1.0);
    CHECK(femto_payoff(inv_e) == doctest::Approx(inv_e).epsilon(1e-12));
    CHECK_THROWS_AS(femto_demand(0.0), std::domain_error);
    CHECK_THROWS_AS(femto_payoff(-0.2), std::domain_error);
}

TEST_CASE("preferred threshold is the price ratio") {
    CHECK(preferred_threshold(0.3, 0.3) == doctest::Approx(1.0));
    CHECK(preferred_threshold(0.2, 1.0 / 3.0) == doctest::Approx(0.6).epsilon(1e-12));
    CHECK(preferred_threshold(0.5, 1.0) == doctest::Approx(0.5).epsilon(1e-12));
    CHECK_THROWS_AS(preferred_threshold(0.4, 0.3), std::domain_error);
}

TEST_CASE("aggregate macrocell demand closed form") {
    CHECK(aggregate_macro_demand(1.0, 1.0) == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(aggregate_macro_demand(0.5, 0.5) ==
          doctest::Approx(1.0 / 0.5 - 1.0 + std::log(0.5)).epsilon(1e-12));
    CHECK(aggregate_macro_demand(0.2, 0.6) ==
          doctest::Approx(0.4 / 0.2 + std::log(0.6)).epsilon(1e-12));
    CHECK_THROWS_AS(aggregate_macro_demand(0.5, 0.4), std::domain_error);
}

TEST_CASE("aggregate femtocell demand") {
    CHECK(aggregate_femto_demand(0.2, 1.0, 1.0) == 0.0);
    CHECK(aggregate_femto_demand(0.2, 1.0 / 3.0, 1.0) ==
          doctest::Approx(1.2).epsilon(1e-12));
    CHECK(aggregate_femto_demand(0.2, 1.0 / 3.0, 0.5) ==
          doctest::Approx(0.6).epsilon(1e-12));
    CHECK_THROWS_AS(aggregate_femto_demand(0.2, 1.0 / 3.0, 0.0), std::domain_error);
}

TEST_CASE("demand and payoff vanish together and are continuous at the kink") {
    for (double p : {0.1, 0.4, 0.7, 0.95}) {
        CHECK(macro_demand(p, p) == 0.0);
        CHECK(macro_payoff(p, p) == 0.0);
        CHECK(macro_demand(std::min(1.0, p + 1e-9), p) < 1e-7);
        CHECK(macro_payoff(std::min(1.0, p + 1e-9), p) < 1e-7);
    }
}

TEST_CASE("payoffs are nonnegative everywhere") {
    std::mt19937_64 rng(17);
    for (int i = 0; i < 500; ++i) {
        double theta = canonical(rng);
        double pm = 0.01 + 0.99 * canonical(rng);
        double pf = 0.01 + 0.99 * canonical(rng);
        CHECK(macro_payoff(theta, pm) >= 0.0);
        CHECK(femto_payoff(pf) >= 0.0);
    }
}

TEST_CASE("single crossing: macrocell beats femtocell exactly above the threshold") {
    std::mt19937_64 rng(23);
    for (int k = 0; k < 40; ++k) {
        double pm = 0.05 + 0.9 * canonical(rng);
        double pf = pm + (1.0 - pm) * canonical(rng);
        if (pf > 1.0) pf = 1.0;
        double threshold = preferred_threshold(pm, pf);
        double rf = femto_payoff(pf);
        for (int i = 1; i <= 200; ++i) {
            double theta = i / 200.0;
            double rm = macro_payoff(theta, pm);
            if (theta >= threshold + 1e-12) {
                CHECK(rm >= rf - 1e-12);
            } else {
                CHECK(rm <= rf + 1e-12);
            }
        }
    }
}

TEST_CASE("market-clearing demand is strictly decreasing and blows up near zero") {
    double prev = aggregate_macro_demand(1.0, 1.0);
    for (int i = 1; i <= 60; ++i) {
        double p = 1.0 - i * (0.999 / 60.0);
        double q = aggregate_macro_demand(p, p);
        CHECK(q > prev);
        prev = q;
    }
    CHECK(aggregate_macro_demand(1e-6, 1e-6) > 1e5);
}

TEST_CASE("aggregate demand agrees with adaptive quadrature of the user demand") {
    std::mt19937_64 rng(31);
    QuadratureConfig quad;
    for (int k = 0; k < 50; ++k) {
        double p = 0.05 + 0.9 * canonical(rng);
        double lo = p + (1.0 - p) * canonical(rng);
        double direct = aggregate_macro_demand(p, lo);
        double numeric =
            integrate([p](double theta) { return macro_demand(theta, p); }, lo, 1.0, quad);
        CHECK(direct == doctest::Approx(numeric).epsilon(0).scale(1).epsilon(1e-9));
        CHECK(std::abs(direct - numeric) < 1e-8);
    }
}
