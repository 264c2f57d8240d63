#include "femtomkt/bench_solver.hpp"

#include <cmath>
#include <stdexcept>

#include "femtomkt/market.hpp"

namespace femtomkt {

namespace {

// Residual of the capacity-clearing condition; strictly decreasing in p.
double clearing_residual(double p, double capacity) {
    return 1.0 / p - 1.0 + std::log(p) - capacity;
}

}  // namespace

BenchmarkResult solve_benchmark(double capacity) {
    if (!std::isfinite(capacity) || capacity < 0.0) {
        throw std::domain_error("capacity must be a nonnegative finite real");
    }
    BenchmarkResult result;
    if (capacity == 0.0) {
        result.price = 1.0;
        result.profit = 0.0;
        result.served_fraction = 0.0;
        return result;
    }
    double lo = 1e-12;  // residual is astronomically positive here
    double hi = 1.0;    // residual = -capacity
    // Bisect until the interval is below width tolerance and the midpoint
    // residual is below residual tolerance; the loop bottoms out at the ULP
    // floor long before 200 iterations.
    for (int i = 0; i < 200; ++i) {
        double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi) {
            break;
        }
        if (clearing_residual(mid, capacity) > 0.0) {
            lo = mid;
        } else {
            hi = mid;
        }
        if (hi - lo < 1e-12 && std::abs(clearing_residual(0.5 * (lo + hi), capacity)) < 1e-10) {
            break;
        }
    }
    double p = 0.5 * (lo + hi);
    if (std::abs(clearing_residual(p, capacity)) > 1e-10) {
        throw SolverError("capacity-clearing bisection failed to reach residual tolerance");
    }
    result.price = p;
    result.profit = p * capacity;
    result.served_fraction = 1.0 - p;
    return result;
}

}  // namespace femtomkt
