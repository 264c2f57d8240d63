#include "femtomkt/stage1.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "femtomkt/bench_solver.hpp"
#include "femtomkt/demand.hpp"
#include "femtomkt/stage2.hpp"

namespace femtomkt {

void StageOneSolverConfig::validate() const {
    if (grid_n_price < 100 || grid_n_band < 100) {
        throw std::invalid_argument("grid sizes must be at least 100 per axis");
    }
    if (refine_rounds < 2) {
        throw std::invalid_argument("refine_rounds must be at least 2");
    }
    if (!(refine_shrink > 0.0) || !(refine_shrink < 1.0)) {
        throw std::invalid_argument("refine_shrink must lie in (0,1)");
    }
    if (!(feasibility_tol > 0.0) || !(convergence_tol > 0.0) || !(regime_band_tol > 0.0)) {
        throw std::invalid_argument("tolerances must be positive");
    }
    if (!(lease_floor_frac > 0.0) || lease_floor_frac > 1.0) {
        throw std::invalid_argument("lease_floor_frac must lie in (0,1]");
    }
}

double preferred_partition(double price_macro, double price_femto) {
    if (!std::isfinite(price_macro) || !std::isfinite(price_femto) ||
        price_macro <= 0.0 || price_macro > price_femto || price_femto > 1.0) {
        throw std::domain_error("need 0 < price_macro <= price_femto <= 1");
    }
    return 1.0 / (1.0 / price_macro - 1.0 / price_femto + 1.0);
}

namespace {

// Unconstrained-demand lease for a candidate price (the femtocell operator's
// preferred purchase when capacity does not bind).
double unconstrained_lease(double price, const MarketParams& mkt) {
    double ec = price + mkt.cost;
    return mkt.coverage * price * (1.0 / (ec * ec) - 1.0) / 4.0;
}

double served_demand_impl(double price, double band_femto, const MarketParams& mkt) {
    auto resp = femto_best_response(price, band_femto, mkt.cost, mkt.coverage);
    double threshold = std::min(price / resp.decision.price_femto, 1.0);
    double covered = aggregate_macro_demand(price, std::max(threshold, price));
    if (mkt.coverage == 1.0) {
        return covered;
    }
    double uncovered = aggregate_macro_demand(price, price);
    return (1.0 - mkt.coverage) * uncovered + mkt.coverage * covered;
}

struct Candidate {
    double profit = -std::numeric_limits<double>::infinity();
    double price = 1.0;
    double band = 0.0;
};

// Lexicographic tie-break: near-equal profits resolve to the smaller band,
// then the smaller price, so repeated runs and grid reorderings agree.
void offer(Candidate& best, double profit, double price, double band) {
    constexpr double tie = 1e-12;
    if (profit > best.profit + tie ||
        (std::abs(profit - best.profit) <= tie &&
         (band < best.band || (band == best.band && price < best.price)))) {
        best = Candidate{profit, price, band};
    }
}

}  // namespace

double macro_served_demand(double price_macro, double band_femto,
                           const MarketParams& params) {
    params.validate();
    if (!std::isfinite(price_macro) || price_macro <= 0.0 || price_macro > 1.0) {
        throw std::domain_error("price_macro must lie in (0,1]");
    }
    if (!std::isfinite(band_femto) || band_femto < 0.0 || band_femto > params.capacity) {
        throw std::domain_error("band_femto must lie in [0, capacity]");
    }
    return served_demand_impl(price_macro, band_femto, params);
}

double macro_profit(double price_macro, double band_femto, const MarketParams& params,
                    double feasibility_tol) {
    params.validate();
    if (!std::isfinite(price_macro) || price_macro <= 0.0 || price_macro > 1.0) {
        throw std::domain_error("price_macro must lie in (0,1]");
    }
    if (band_femto > 0.0 && params.cost > 0.0 && price_macro > 1.0 - params.cost) {
        // With a positive cost the femtocell needs price room above
        // price_macro + cost; with no lease the usual cap of 1 applies.
        throw std::domain_error("infeasible: price_macro exceeds 1 - cost");
    }
    if (!std::isfinite(band_femto) || band_femto < 0.0 || band_femto > params.capacity) {
        throw std::domain_error("band_femto must lie in [0, capacity]");
    }
    auto resp = femto_best_response(price_macro, band_femto, params.cost, params.coverage);
    double demand = served_demand_impl(price_macro, band_femto, params);
    if (demand > params.capacity - band_femto + feasibility_tol) {
        throw std::domain_error(
            "infeasible: macrocell band cannot carry the served demand");
    }
    return price_macro * resp.decision.band_leased + price_macro * demand;
}

Equilibrium solve_stage1(const MarketParams& params, const StageOneSolverConfig& cfg) {
    params.validate();
    cfg.validate();

    const double capacity = params.capacity;
    BenchmarkResult bench = solve_benchmark(capacity);

    // The no-lease outcome is seeded exactly: it is the capacity-clearing
    // price, feasible by construction, and every dual candidate must beat it.
    Candidate best{bench.profit, bench.price, 0.0};

    if (capacity > 0.0) {
        const double price_cap = params.cost > 0.0 ? 1.0 - params.cost : 1.0;

        auto try_dual = [&](double price, double band) {
            if (price <= 0.0 || price > price_cap) return;
            if (band <= 0.0 || band >= capacity) return;
            double demand = served_demand_impl(price, band, params);
            if (demand > capacity - band + cfg.feasibility_tol) return;
            auto resp = femto_best_response(price, band, params.cost, params.coverage);
            offer(best, price * (resp.decision.band_leased + demand), price, band);
        };

        // Largest lease the macrocell band can accommodate at this price;
        // total use (band + served demand) increases with the lease.
        auto binding_band = [&](double price, double lo, double hi) -> double {
            auto used = [&](double band) {
                return band + served_demand_impl(price, band, params);
            };
            if (used(lo) > capacity) return -1.0;
            if (used(hi) <= capacity) return hi;
            double a = lo, b = hi;
            for (int i = 0; i < 80; ++i) {
                double mid = 0.5 * (a + b);
                if (used(mid) <= capacity) {
                    a = mid;
                } else {
                    b = mid;
                }
            }
            return a;
        };

        // Full-sale corner along a fixed lease fraction: the price at which
        // the lease plus the served demand exactly exhausts capacity. The
        // profit envelope rises linearly (p times capacity) up to this corner
        // and falls beyond it, so the corner is located by bisection rather
        // than left to the price grid.
        auto corner_candidate = [&](double frac) {
            auto used_at = [&](double price) {
                double band = frac * std::min(unconstrained_lease(price, params), capacity);
                if (band <= 0.0) return 0.0;
                return band + served_demand_impl(price, band, params);
            };
            double lo = 1e-9, hi = price_cap;
            if (used_at(hi) > capacity) return;  // even the top price oversells
            for (int i = 0; i < 100; ++i) {
                double mid = 0.5 * (lo + hi);
                if (used_at(mid) > capacity) {
                    lo = mid;
                } else {
                    hi = mid;
                }
            }
            double band = frac * std::min(unconstrained_lease(hi, params), capacity);
            try_dual(hi, band);
        };

        auto scan_price = [&](double price) {
            if (price <= 0.0 || price > price_cap) return;
            double kink = std::min(unconstrained_lease(price, params), capacity);
            if (kink <= 0.0) return;
            double floor = cfg.lease_floor_frac * kink;
            for (int j = 0; j <= cfg.grid_n_band; ++j) {
                double band = floor + (kink - floor) * j / cfg.grid_n_band;
                try_dual(price, band);
            }
            double bb = binding_band(price, floor, kink);
            if (bb > 0.0) try_dual(price, bb);
        };

        corner_candidate(cfg.lease_floor_frac);
        corner_candidate(1.0);

        double span = price_cap;
        double center = 0.5 * price_cap;
        double last_improvement = 0.0;
        for (int round = 0; round <= cfg.refine_rounds; ++round) {
            double before = best.profit;
            double lo = std::max(span / cfg.grid_n_price, center - 0.5 * span);
            double hi = std::min(price_cap, center + 0.5 * span);
            for (int i = 0; i <= cfg.grid_n_price; ++i) {
                scan_price(lo + (hi - lo) * i / cfg.grid_n_price);
            }
            last_improvement = best.profit - before;
            center = best.price;
            span *= cfg.refine_shrink;
        }
        if (last_improvement > cfg.convergence_tol) {
            throw SolverError("price refinement still improving after the final round");
        }
    }

    Equilibrium eq;
    if (best.band < cfg.regime_band_tol) {
        eq.regime = Regime::MacroOnly;
        eq.stage1 = {bench.price, 0.0, capacity};
        eq.stage2 = {1.0, 0.0};
        eq.theta_threshold = bench.price;
        eq.theta_preferred_macro = bench.price;
        eq.profit_macro = bench.profit;
        eq.profit_femto = 0.0;
        return eq;
    }

    auto resp = femto_best_response(best.price, best.band, params.cost, params.coverage);
    eq.regime = Regime::DualService;
    eq.stage1 = {best.price, best.band, capacity - best.band};
    eq.stage2 = resp.decision;
    eq.theta_threshold = best.price / resp.decision.price_femto;
    eq.theta_preferred_macro = preferred_partition(best.price, resp.decision.price_femto);
    eq.profit_macro = best.profit;
    eq.profit_femto = resp.profit;
    return eq;
}

double find_regime_boundary(double cost, double coverage, double capacity_lo,
                            double capacity_hi, double tol,
                            const StageOneSolverConfig& cfg) {
    if (!(tol > 0.0)) {
        throw std::domain_error("tol must be positive");
    }
    if (!(capacity_lo >= 0.0) || !(capacity_hi > capacity_lo)) {
        throw std::domain_error("need 0 <= capacity_lo < capacity_hi");
    }
    auto regime_at = [&](double capacity) {
        MarketParams mkt{capacity, cost, coverage};
        return solve_stage1(mkt, cfg).regime;
    };
    if (regime_at(capacity_lo) != Regime::DualService) {
        throw std::domain_error("invalid bracket: expected leasing at capacity_lo");
    }
    if (regime_at(capacity_hi) != Regime::MacroOnly) {
        throw std::domain_error("invalid bracket: expected no leasing at capacity_hi");
    }
    double lo = capacity_lo, hi = capacity_hi;
    while (hi - lo > tol) {
        double mid = 0.5 * (lo + hi);
        if (regime_at(mid) == Regime::DualService) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

}  // namespace femtomkt
