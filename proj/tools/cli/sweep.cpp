#include "cli/sweep.hpp"

#include <sstream>
#include <stdexcept>

namespace femtomkt::cli {

SweepParameter parse_sweep_parameter(const std::string& name) {
    if (name == "B") return SweepParameter::Capacity;
    if (name == "C") return SweepParameter::Cost;
    if (name == "eta") return SweepParameter::Coverage;
    throw std::domain_error("unknown sweep parameter '" + name + "' (expected B, C or eta)");
}

const char* to_string(SweepParameter p) {
    switch (p) {
        case SweepParameter::Capacity: return "B";
        case SweepParameter::Cost: return "C";
        case SweepParameter::Coverage: return "eta";
    }
    return "?";
}

void SweepSpec::validate() const {
    if (!(from < to)) {
        throw std::domain_error("sweep range must have from < to");
    }
    if (steps < 2) {
        throw std::domain_error("sweep needs at least 2 steps");
    }
    MarketParams lo = fixed, hi = fixed;
    switch (parameter) {
        case SweepParameter::Capacity:
            lo.capacity = from;
            hi.capacity = to;
            break;
        case SweepParameter::Cost:
            lo.cost = from;
            hi.cost = to;
            break;
        case SweepParameter::Coverage:
            lo.coverage = from;
            hi.coverage = to;
            break;
    }
    lo.validate();
    hi.validate();
}

std::vector<ResultRow> run_sweep(const SweepSpec& spec) {
    spec.validate();
    std::vector<ResultRow> rows;
    rows.reserve(spec.steps);
    for (int i = 0; i < spec.steps; ++i) {
        double value = spec.from + (spec.to - spec.from) * i / (spec.steps - 1);
        MarketParams params = spec.fixed;
        switch (spec.parameter) {
            case SweepParameter::Capacity: params.capacity = value; break;
            case SweepParameter::Cost: params.cost = value; break;
            case SweepParameter::Coverage: params.coverage = value; break;
        }
        rows.push_back(solve_row(params));
    }
    return rows;
}

std::string sweep_csv(const std::vector<ResultRow>& rows) {
    std::ostringstream os;
    os << kCsvHeader << '\n';
    for (const auto& row : rows) {
        os << to_csv(row);
    }
    return os.str();
}

}  // namespace femtomkt::cli
