// Scenario and equilibrium types for the two-tier spectrum market.
#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace femtomkt {

// Thrown when a solver fails to converge or a search bracket is invalid.
class SolverError : public std::runtime_error {
public:
    explicit SolverError(const std::string& what) : std::runtime_error(what) {}
};

// Exogenous scenario. All quantities are dimensionless, normalized to a unit
// user population.
struct MarketParams {
    double capacity = 1.1;  // total bandwidth B
    double cost = 0.0;      // femtocell operational cost per unit bandwidth, in [0,1)
    double coverage = 1.0;  // fraction of users reachable by femtocell, in (0,1]

    // Enforces B >= 0, 0 <= cost < 1, 0 < coverage <= 1, and that at most one
    // extension is active (cost > 0 and coverage < 1 are mutually exclusive).
    void validate() const;
};

// Macrocell operator's decision: price and the band set aside for leasing.
struct StageOneDecision {
    double price_macro = 1.0;  // p_M
    double band_femto = 0.0;   // B_F
    double band_macro = 0.0;   // B_M = B - B_F
};

// Femtocell operator's decision: retail price and leased band.
struct StageTwoDecision {
    double price_femto = 1.0;  // p_F
    double band_leased = 0.0;  // B_R <= B_F
};

enum class Regime { DualService, MacroOnly };

enum class FemtoBinding { DemandLimited, CapacityLimited };

inline const char* to_string(Regime r) {
    return r == Regime::DualService ? "DualService" : "MacroOnly";
}

// Full solved outcome of the three-stage game.
struct Equilibrium {
    StageOneDecision stage1;
    StageTwoDecision stage2;
    double theta_threshold = 1.0;        // finalized partition threshold, p_M/p_F
    double theta_preferred_macro = 1.0;  // threshold the macrocell operator would pick
    double profit_macro = 0.0;
    double profit_femto = 0.0;
    Regime regime = Regime::MacroOnly;
};

struct PayoffSample {
    double theta = 0.0;
    double payoff = 0.0;
};

// Surplus accounting for one equilibrium.
struct WelfareReport {
    double consumer_surplus = 0.0;
    double profit_macro = 0.0;
    double profit_femto = 0.0;
    double social_welfare = 0.0;
    std::vector<PayoffSample> payoff_curve;
};

}  // namespace femtomkt
