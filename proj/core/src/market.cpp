#include "femtomkt/market.hpp"

#include <cmath>

namespace femtomkt {

void MarketParams::validate() const {
    if (!std::isfinite(capacity) || capacity < 0.0) {
        throw std::domain_error("capacity must be a nonnegative finite real");
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

}  // namespace femtomkt
