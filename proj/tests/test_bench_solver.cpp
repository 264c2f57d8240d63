#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "femtomkt/bench_solver.hpp"
#include "femtomkt/demand.hpp"
#include "femtomkt/market.hpp"

using namespace femtomkt;

namespace {
double residual(double p, double capacity) {
    return 1.0 / p - 1.0 + std::log(p) - capacity;
}
}  // namespace

TEST_CASE("zero capacity clears at price one") {
    auto r = solve_benchmark(0.0);
    CHECK(r.price == 1.0);
    CHECK(r.profit == 0.0);
    CHECK(r.served_fraction == 0.0);
}

TEST_CASE("unit capacity root") {
    auto r = solve_benchmark(1.0);
    CHECK(r.price == doctest::Approx(0.3178444329).epsilon(1e-8));
    CHECK(std::abs(residual(r.price, 1.0)) < 1e-10);
    CHECK(r.profit == doctest::Approx(r.price).epsilon(1e-12));
    CHECK(r.served_fraction == doctest::Approx(1.0 - r.price));
}

TEST_CASE("root residual stays below tolerance across capacities") {
    for (int i = 0; i <= 80; ++i) {
        double capacity = 0.01 + i * (10.0 - 0.01) / 80.0;
        auto r = solve_benchmark(capacity);
        CHECK(std::abs(residual(r.price, capacity)) < 1e-10);
        // total demand at the root equals the capacity
        CHECK(aggregate_macro_demand(r.price, r.price) ==
              doctest::Approx(capacity).epsilon(0).scale(1).epsilon(1e-9));
    }
}

TEST_CASE("price decreases and profit increases with capacity") {
    double prev_price = 2.0;
    double prev_profit = -1.0;
    for (int i = 0; i < 50; ++i) {
        double capacity = 0.01 + i * (10.0 - 0.01) / 49.0;
        auto r = solve_benchmark(capacity);
        CHECK(r.price < prev_price);
        CHECK(r.profit > prev_profit);
        prev_price = r.price;
        prev_profit = r.profit;
    }
}

TEST_CASE("bisection is deterministic") {
    for (double capacity : {0.1, 1.0, 4.77, 9.3}) {
        auto a = solve_benchmark(capacity);
        auto b = solve_benchmark(capacity);
        CHECK(a.price == b.price);
        CHECK(a.profit == b.profit);
    }
}

TEST_CASE("invalid capacity is rejected") {
    CHECK_THROWS_AS(solve_benchmark(-1.0), std::domain_error);
    CHECK_THROWS_AS(solve_benchmark(std::nan("")), std::domain_error);
    CHECK_THROWS_AS(solve_benchmark(std::numeric_limits<double>::infinity()),
                    std::domain_error);
}
