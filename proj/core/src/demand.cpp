#include "femtomkt/demand.hpp"

#include <cmath>
#include <stdexcept>

namespace femtomkt {

namespace {

void require_finite(double x, const char* name) {
    if (!std::isfinite(x)) {
        throw std::domain_error(std::string(name) + " must be finite");
    }
}

}  // namespace

double macro_demand(double theta, double price_macro) {
    require_finite(theta, "theta");
    require_finite(price_macro, "price_macro");
    if (theta < 0.0 || theta > 1.0) {
        throw std::domain_error("theta must lie in [0,1]");
    }
    if (price_macro <= 0.0) {
        throw std::domain_error("price_macro must be positive");
    }
    if (price_macro >= theta) {
        return 0.0;  // the two branches coincide at price == theta
    }
    return 1.0 / price_macro - 1.0 / theta;
}

double macro_payoff(double theta, double price_macro) {
    require_finite(theta, "theta");
    require_finite(price_macro, "price_macro");
    if (theta < 0.0 || theta > 1.0) {
        throw std::domain_error("theta must lie in [0,1]");
    }
    if (price_macro <= 0.0) {
        throw std::domain_error("price_macro must be positive");
    }
    if (price_macro >= theta) {
        return 0.0;
    }
    return std::log(theta / price_macro) - 1.0 + price_macro / theta;
}

double femto_demand(double price_femto) {
    require_finite(price_femto, "price_femto");
    if (price_femto <= 0.0) {
        throw std::domain_error("price_femto must be positive");
    }
    if (price_femto >= 1.0) {
        return 0.0;
    }
    return 1.0 / price_femto - 1.0;
}

double femto_payoff(double price_femto) {
    require_finite(price_femto, "price_femto");
    if (price_femto <= 0.0) {
        throw std::domain_error("price_femto must be positive");
    }
    if (price_femto >= 1.0) {
        return 0.0;
    }
    return -std::log(price_femto) - 1.0 + price_femto;
}

double preferred_threshold(double price_macro, double price_femto) {
    require_finite(price_macro, "price_macro");
    require_finite(price_femto, "price_femto");
    if (price_macro <= 0.0 || price_femto <= 0.0) {
        throw std::domain_error("prices must be positive");
    }
    if (price_macro > price_femto) {
        throw std::domain_error("price_macro must not exceed price_femto");
    }
    return price_macro / price_femto;
}

double aggregate_macro_demand(double price_macro, double theta_lo) {
    require_finite(price_macro, "price_macro");
    require_finite(theta_lo, "theta_lo");
    if (price_macro <= 0.0 || price_macro > 1.0) {
        throw std::domain_error("price_macro must lie in (0,1]");
    }
    if (theta_lo < price_macro || theta_lo > 1.0) {
        throw std::domain_error("theta_lo must lie in [price_macro, 1]");
    }
    return (1.0 - theta_lo) / price_macro + std::log(theta_lo);
}

double aggregate_femto_demand(double price_macro, double price_femto, double coverage) {
    require_finite(coverage, "coverage");
    if (coverage <= 0.0 || coverage > 1.0) {
        throw std::domain_error("coverage must lie in (0,1]");
    }
    if (price_femto > 1.0) {
        throw std::domain_error("price_femto must lie in (0,1]");
    }
    double threshold = preferred_threshold(price_macro, price_femto);
    return coverage * threshold * (1.0 / price_femto - 1.0);
}

}  // namespace femtomkt
