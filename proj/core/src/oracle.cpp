#include "femtomkt/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>
#include <stdexcept>

#include "femtomkt/demand.hpp"

namespace femtomkt {

namespace {

// Portable uniform draw in [0,1); uniform_real_distribution is not
// bit-reproducible across standard libraries.
double canonical(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

// The femtocell objective, rebuilt from the demand primitives only: revenue
// net of operational cost on the bandwidth actually sold (capped by both the
// lease and the preferred demand of covered users below the threshold),
// minus the lease payment.
double raw_femto_objective(double price_femto, double band_leased, double price_macro,
                           double cost, double coverage) {
    double demand = price_femto < 1.0 ? 1.0 / price_femto - 1.0 : 0.0;
    double preferred = coverage * (price_macro / price_femto) * demand;
    return (price_femto - cost) * std::min(band_leased, preferred) -
           price_macro * band_leased;
}

}  // namespace

GridArgmaxResult grid_argmax_femto(double price_macro, double band_femto, double cost,
                                   double coverage, int n) {
    if (n < 2) {
        throw std::domain_error("grid size must be at least 2");
    }
    double price_lo = price_macro + cost;
    if (price_lo >= 1.0) {
        throw std::domain_error("no feasible femtocell price above price_macro + cost");
    }
    GridArgmaxResult result;
    result.price_cell = (1.0 - price_lo) / n;
    result.band_cell = band_femto > 0.0 ? band_femto / n : 0.0;
    result.price_femto = 1.0;
    result.band_leased = 0.0;
    result.profit = 0.0;  // the no-trade corner; never negative at the argmax

    auto probe = [&](double price, double band) {
        double profit = raw_femto_objective(price, band, price_macro, cost, coverage);
        if (profit > result.profit) {
            result.price_femto = price;
            result.band_leased = band;
            result.profit = profit;
        }
    };

    for (int i = 1; i <= n; ++i) {
        double price = price_lo + (1.0 - price_lo) * i / n;
        for (int j = 0; j <= n; ++j) {
            probe(price, band_femto * j / n);
        }
        // The column objective is a min of two lines in the lease; the lease
        // grid alone would quantize the column peak (where they cross, i.e.
        // at the preferred demand), so probe the crossing as well.
        double demand = price < 1.0 ? 1.0 / price - 1.0 : 0.0;
        double crossing = coverage * (price_macro / price) * demand;
        probe(price, std::min(crossing, band_femto));
        if (band_femto == 0.0) {
            break;  // single degenerate column
        }
    }
    return result;
}

DemandSample monte_carlo_demand(double price_macro, double price_femto, double coverage,
                                int n_users, std::uint64_t seed) {
    if (n_users < 10000) {
        throw std::domain_error("n_users must be at least 10^4");
    }
    std::mt19937_64 rng(seed);
    double threshold = price_femto >= price_macro ? price_macro / price_femto : 1.0;
    double femto_sum = 0.0, femto_sq = 0.0;
    double macro_sum = 0.0, macro_sq = 0.0;
    for (int i = 0; i < n_users; ++i) {
        double theta = canonical(rng);
        bool covered = canonical(rng) <= coverage;
        double f = 0.0, m = 0.0;
        if (covered && theta < threshold) {
            f = femto_demand(price_femto);
        } else {
            m = macro_demand(theta, price_macro);
        }
        femto_sum += f;
        femto_sq += f * f;
        macro_sum += m;
        macro_sq += m * m;
    }
    auto finish = [n_users](double sum, double sq) {
        double mean = sum / n_users;
        double var = std::max(0.0, sq / n_users - mean * mean);
        return std::pair{mean, std::sqrt(var / n_users)};
    };
    DemandSample out;
    std::tie(out.femto_total, out.femto_stderr) = finish(femto_sum, femto_sq);
    std::tie(out.macro_total, out.macro_stderr) = finish(macro_sum, macro_sq);
    return out;
}

namespace {

struct Scenario {
    double price_macro;
    double band_femto;
    double cost;
    double coverage;
};

std::string describe(const Scenario& s) {
    std::ostringstream os;
    os << "p_M=" << s.price_macro << " B_F=" << s.band_femto << " C=" << s.cost
       << " eta=" << s.coverage;
    return os.str();
}

// Closed-form best response, restated against the published formulas so the
// comparison does not route through the solver module.
void closed_form_response(const Scenario& s, double& price, double& band) {
    double ec = s.price_macro + s.cost;
    double interior_price = 2.0 / (1.0 + 1.0 / ec);
    double a = s.price_macro * s.coverage;
    double cap_price =
        2.0 * a /
        (std::sqrt(a * a + 4.0 * s.price_macro * s.coverage * s.band_femto) + a);
    price = std::min(std::max(interior_price, cap_price), 1.0);
    band = std::min(s.coverage * s.price_macro * (1.0 / (ec * ec) - 1.0) / 4.0,
                    s.band_femto);
}

}  // namespace

OracleReport verify_all(int sample_count, std::uint64_t seed) {
    if (sample_count < 0) {
        throw std::domain_error("sample_count must be nonnegative");
    }
    OracleReport report;
    report.samples = sample_count;
    report.seed = seed;

    constexpr int kGridN = 1000;
    constexpr double kProfitTol = 1e-3;
    constexpr int kMcUsers = 100000;

    std::mt19937_64 rng(seed);
    std::vector<OracleFailure> mc_exceedances;

    for (int k = 0; k < sample_count; ++k) {
        Scenario s;
        s.price_macro = 0.05 + 0.85 * canonical(rng);
        s.band_femto = 0.05 + 2.95 * canonical(rng);
        s.cost = 0.0;
        s.coverage = 1.0;
        switch (k % 3) {
            case 0:
                break;
            case 1: {
                double room = 1.0 - s.price_macro - 0.05;
                s.cost = std::min(0.9, room) * canonical(rng);
                break;
            }
            case 2:
                s.coverage = 0.1 + 0.9 * canonical(rng);
                break;
        }

        double cf_price = 1.0, cf_band = 0.0;
        closed_form_response(s, cf_price, cf_band);
        double cf_profit =
            raw_femto_objective(cf_price, cf_band, s.price_macro, s.cost, s.coverage);

        auto grid = grid_argmax_femto(s.price_macro, s.band_femto, s.cost, s.coverage,
                                      kGridN);
        double price_cells = std::abs(grid.price_femto - cf_price) / grid.price_cell;
        double profit_gap = std::abs(grid.profit - cf_profit);
        report.max_price_cells = std::max(report.max_price_cells, price_cells);
        report.max_abs_deviation = std::max(report.max_abs_deviation, profit_gap);
        if (price_cells > 1.0 + 1e-9) {
            report.failures.push_back(
                {"grid-argmax price", describe(s), cf_price, grid.price_femto});
        }
        if (profit_gap > kProfitTol) {
            report.failures.push_back(
                {"grid-argmax profit", describe(s), cf_profit, grid.profit});
        }

        // Monte-Carlo check of the demand integrals at the best-response price.
        std::uint64_t mc_seed = rng();
        auto mc = monte_carlo_demand(s.price_macro, cf_price, s.coverage, kMcUsers,
                                     mc_seed);
        double femto_exact =
            cf_price < 1.0 ? aggregate_femto_demand(s.price_macro, cf_price, s.coverage)
                           : 0.0;
        double threshold = std::min(s.price_macro / cf_price, 1.0);
        double macro_exact =
            s.coverage * aggregate_macro_demand(s.price_macro, threshold) +
            (1.0 - s.coverage) * aggregate_macro_demand(s.price_macro, s.price_macro);
        double fz = mc.femto_stderr > 0.0
                        ? std::abs(mc.femto_total - femto_exact) / mc.femto_stderr
                        : 0.0;
        double mz = mc.macro_stderr > 0.0
                        ? std::abs(mc.macro_total - macro_exact) / mc.macro_stderr
                        : 0.0;
        double z = std::max(fz, mz);
        report.max_mc_sigmas = std::max(report.max_mc_sigmas, z);
        if (z > 3.0) {
            mc_exceedances.push_back({"monte-carlo demand beyond 3 sigma", describe(s),
                                      z <= fz ? femto_exact : macro_exact,
                                      z <= fz ? mc.femto_total : mc.macro_total});
        }
    }

    // A 3-sigma rule trips on its own at roughly the 0.5% scenario rate; only
    // a rate above 1% of scenarios indicates a real mismatch.
    int budget = std::max(1, sample_count / 100);
    if (static_cast<int>(mc_exceedances.size()) > budget) {
        report.failures.insert(report.failures.end(), mc_exceedances.begin(),
                               mc_exceedances.end());
    }
    return report;
}

std::string format_report(const OracleReport& report) {
    std::ostringstream os;
    os << "oracle report: samples=" << report.samples << " seed=" << report.seed
       << " max_profit_dev=" << report.max_abs_deviation
       << " max_price_cells=" << report.max_price_cells
       << " max_mc_sigmas=" << report.max_mc_sigmas
       << " failures=" << report.failures.size() << "\n";
    for (const auto& f : report.failures) {
        os << "  FAIL " << f.check << " [" << f.scenario << "] expected=" << f.expected
           << " got=" << f.got << "\n";
    }
    return os.str();
}

}  // namespace femtomkt
