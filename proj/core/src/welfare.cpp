#include "femtomkt/welfare.hpp"

#include <algorithm>
#include <cmath>

#include "femtomkt/bench_solver.hpp"
#include "femtomkt/demand.hpp"

namespace femtomkt {

namespace {

// Aggregate macrocell payoff of users with theta in [lo, 1] at price p.
double macro_surplus(double p, double lo, const QuadratureConfig& cfg) {
    double from = std::max(lo, p);
    if (from >= 1.0) {
        return 0.0;
    }
    return integrate([p](double theta) { return macro_payoff(theta, p); }, from, 1.0, cfg);
}

}  // namespace

double consumer_surplus_benchmark(double capacity, const QuadratureConfig& cfg) {
    BenchmarkResult bench = solve_benchmark(capacity);
    return macro_surplus(bench.price, bench.price, cfg);
}

double consumer_surplus_dual(const Equilibrium& eq, const MarketParams& params,
                             const QuadratureConfig& cfg) {
    params.validate();
    double p = eq.stage1.price_macro;
    double pf = eq.stage2.price_femto;
    double threshold = eq.theta_threshold;
    double covered = threshold * femto_payoff(pf) + macro_surplus(p, threshold, cfg);
    if (params.coverage == 1.0) {
        return covered;
    }
    double uncovered = macro_surplus(p, p, cfg);
    return params.coverage * covered + (1.0 - params.coverage) * uncovered;
}

WelfareReport social_welfare(const Equilibrium& eq, const MarketParams& params,
                             const QuadratureConfig& cfg) {
    WelfareReport report;
    report.consumer_surplus = consumer_surplus_dual(eq, params, cfg);
    report.profit_macro = eq.profit_macro;
    report.profit_femto = eq.profit_femto;
    report.social_welfare =
        report.consumer_surplus + report.profit_macro + report.profit_femto;

    constexpr int kCurveSamples = 256;
    report.payoff_curve.reserve(kCurveSamples + 1);
    for (int i = 0; i <= kCurveSamples; ++i) {
        double theta = static_cast<double>(i) / kCurveSamples;
        double macro = theta > 0.0 ? macro_payoff(theta, eq.stage1.price_macro) : 0.0;
        double dual = params.coverage *
                          std::max(femto_payoff(eq.stage2.price_femto), macro) +
                      (1.0 - params.coverage) * macro;
        report.payoff_curve.push_back({theta, dual});
    }
    return report;
}

std::vector<PayoffComparison> payoff_curve(const Equilibrium& eq, const MarketParams& params,
                                           std::span<const double> theta_grid) {
    params.validate();
    BenchmarkResult bench = solve_benchmark(params.capacity);
    std::vector<PayoffComparison> out;
    out.reserve(theta_grid.size());
    for (double theta : theta_grid) {
        PayoffComparison c;
        c.theta = theta;
        double macro = theta > 0.0 ? macro_payoff(theta, eq.stage1.price_macro) : 0.0;
        double femto = femto_payoff(eq.stage2.price_femto);
        c.payoff_dual =
            params.coverage * std::max(femto, macro) + (1.0 - params.coverage) * macro;
        c.payoff_benchmark = theta > 0.0 ? macro_payoff(theta, bench.price) : 0.0;
        out.push_back(c);
    }
    return out;
}

}  // namespace femtomkt
