#pragma once

#include <functional>

namespace femtomkt {

struct QuadratureConfig {
    double abs_tol = 1e-8;
    int max_depth = 40;

    void validate() const;  // positive tolerance, positive depth
};

// Adaptive Simpson integration by recursive interval halving with the usual
// |S2 - S1|/15 error estimate.
double integrate(const std::function<double(double)>& f, double a, double b,
                 const QuadratureConfig& cfg = {});

}  // namespace femtomkt
