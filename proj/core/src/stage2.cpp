#include "femtomkt/stage2.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "femtomkt/demand.hpp"

namespace femtomkt {

namespace {

void check_scenario(double price_macro, double cost, double coverage) {
    if (!std::isfinite(price_macro) || price_macro <= 0.0 || price_macro > 1.0) {
        throw std::domain_error("price_macro must lie in (0,1]");
    }
    if (!std::isfinite(cost) || cost < 0.0 || cost >= 1.0) {
        throw std::domain_error("cost must lie in [0,1)");
    }
    if (!std::isfinite(coverage) || coverage <= 0.0 || coverage > 1.0) {
        throw std::domain_error("coverage must lie in (0,1]");
    }
    if (cost > 0.0 && coverage < 1.0) {
        throw std::domain_error(
            "operational cost and reduced coverage cannot both be active");
    }
}

}  // namespace

double femto_profit(double price_femto, double band_leased, double price_macro,
                    double cost, double coverage) {
    check_scenario(price_macro, cost, coverage);
    if (!std::isfinite(price_femto) || price_femto <= 0.0 || price_femto > 1.0) {
        throw std::domain_error("price_femto must lie in (0,1]");
    }
    if (!std::isfinite(band_leased) || band_leased < 0.0) {
        throw std::domain_error("band_leased must be nonnegative");
    }
    double preferred = coverage * (price_macro / price_femto) * femto_demand(price_femto);
    return (price_femto - cost) * std::min(band_leased, preferred) -
           price_macro * band_leased;
}

double interior_lease_curve(double price_femto, double price_macro, double cost,
                            double coverage) {
    check_scenario(price_macro, cost, coverage);
    (void)cost;  // the supply-equals-demand curve does not involve the cost
    if (!std::isfinite(price_femto) || price_femto <= price_macro || price_femto > 1.0) {
        throw std::domain_error("price_femto must lie in (price_macro, 1]");
    }
    return coverage * price_macro * (1.0 - price_femto) / (price_femto * price_femto);
}

FemtoBestResponse femto_best_response(double price_macro, double band_femto,
                                      double cost, double coverage) {
    check_scenario(price_macro, cost, coverage);
    if (!std::isfinite(band_femto) || band_femto < 0.0) {
        throw std::domain_error("band_femto must be nonnegative");
    }
    if (cost > 0.0 && price_macro + cost >= 1.0) {
        throw std::domain_error(
            "infeasible: price_macro + cost >= 1 leaves no viable femtocell price");
    }

    FemtoBestResponse resp;
    if (band_femto == 0.0) {
        // Degenerate no-lease response; the capacity-constrained price branch
        // tends to 1 as the band vanishes, so this is its continuous limit.
        resp.decision.price_femto = 1.0;
        resp.decision.band_leased = 0.0;
        resp.binding = FemtoBinding::CapacityLimited;
        resp.profit = 0.0;
        return resp;
    }

    double effective_cost = price_macro + cost;
    double interior_price = 2.0 / (1.0 + 1.0 / effective_cost);
    // Price at which the supply-equals-demand lease exactly fills band_femto,
    // written with the conjugate to stay stable as band_femto -> 0.
    double a = price_macro * coverage;
    double cap_price =
        2.0 * a / (std::sqrt(a * a + 4.0 * price_macro * coverage * band_femto) + a);
    double price = std::min(std::max(interior_price, cap_price), 1.0);

    double interior_lease =
        coverage * price_macro * (1.0 / (effective_cost * effective_cost) - 1.0) / 4.0;
    double lease = std::min(interior_lease, band_femto);

    resp.decision.price_femto = price;
    resp.decision.band_leased = lease;
    resp.binding = interior_lease <= band_femto ? FemtoBinding::DemandLimited
                                                : FemtoBinding::CapacityLimited;
    resp.profit = femto_profit(price, lease, price_macro, cost, coverage);
    return resp;
}

}  // namespace femtomkt
