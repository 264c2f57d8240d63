#include "cli/report.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>
#include <stdexcept>

#include "femtomkt/bench_solver.hpp"
#include "femtomkt/stage1.hpp"
#include "femtomkt/welfare.hpp"

namespace femtomkt::cli {

ResultRow solve_row(const MarketParams& params) {
    ResultRow row;
    row.params = params;
    row.eq = solve_stage1(params);
    row.cs_dual = consumer_surplus_dual(row.eq, params);
    row.cs_bench = consumer_surplus_benchmark(params.capacity);
    BenchmarkResult bench = solve_benchmark(params.capacity);
    row.welfare_dual = row.cs_dual + row.eq.profit_macro + row.eq.profit_femto;
    row.welfare_bench = row.cs_bench + bench.profit;
    return row;
}

std::string format_number(double x) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.10g", x);
    return buf;
}

namespace {

void check(bool ok, const char* what) {
    if (!ok) {
        throw std::logic_error(std::string("equilibrium invariant violated: ") + what);
    }
}

void validate(const ResultRow& row) {
    const auto& eq = row.eq;
    constexpr double tol = 1e-9;
    check(std::abs(eq.stage1.band_femto + eq.stage1.band_macro - row.params.capacity) <=
              tol * std::max(1.0, row.params.capacity),
          "band split must sum to capacity");
    check(std::abs(eq.theta_threshold -
                   eq.stage1.price_macro / eq.stage2.price_femto) <= tol,
          "threshold must equal the price ratio");
    check(eq.theta_preferred_macro <= eq.theta_threshold + tol,
          "preferred threshold must not exceed the finalized one");
    check((eq.regime == Regime::MacroOnly) == (eq.stage1.band_femto < 1e-4),
          "regime flag must match the leased band");
    check(eq.stage2.band_leased <= eq.stage1.band_femto + tol,
          "lease cannot exceed the set-aside band");
    double welfare_sum = row.cs_dual + eq.profit_macro + eq.profit_femto;
    check(std::abs(row.welfare_dual - welfare_sum) <= 1e-6,
          "welfare must equal surplus plus profits");
}

}  // namespace

std::string to_csv(const ResultRow& row) {
    validate(row);
    std::ostringstream os;
    os << format_number(row.params.capacity) << ',' << format_number(row.params.cost)
       << ',' << format_number(row.params.coverage) << ',' << to_string(row.eq.regime)
       << ',' << format_number(row.eq.stage1.price_macro) << ','
       << format_number(row.eq.stage2.price_femto) << ','
       << format_number(row.eq.stage1.band_femto) << ','
       << format_number(row.eq.stage1.band_macro) << ','
       << format_number(row.eq.stage2.band_leased) << ','
       << format_number(row.eq.theta_threshold) << ','
       << format_number(row.eq.theta_preferred_macro) << ','
       << format_number(row.eq.profit_macro) << ','
       << format_number(row.eq.profit_femto) << ','
       << format_number(row.cs_dual) << ',' << format_number(row.cs_bench) << ','
       << format_number(row.welfare_dual) << ',' << format_number(row.welfare_bench)
       << '\n';
    return os.str();
}

}  // namespace femtomkt::cli
