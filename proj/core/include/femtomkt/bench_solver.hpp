// Macrocell-only market: the unique price that clears total capacity.
#pragma once

namespace femtomkt {

struct BenchmarkResult {
    double price = 1.0;            // unique root of 1/p - 1 + ln p = B in (0,1]
    double profit = 0.0;           // price * B
    double served_fraction = 0.0;  // 1 - price
};

// Solves 1/p - 1 + ln p = B by bisection on the strictly decreasing residual.
// The bracket [1e-12, 1] always contains a sign change for B > 0; B = 0
// short-circuits to p = 1. Converges to interval width < 1e-12 and
// |residual| < 1e-10. Throws std::domain_error for negative or non-finite B.
BenchmarkResult solve_benchmark(double capacity);

}  // namespace femtomkt
