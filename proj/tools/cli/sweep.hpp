// Parameter sweeps over capacity, cost or coverage.
#pragma once

#include <string>
#include <vector>

#include "cli/report.hpp"

namespace femtomkt::cli {

enum class SweepParameter { Capacity, Cost, Coverage };

SweepParameter parse_sweep_parameter(const std::string& name);  // "B" | "C" | "eta"
const char* to_string(SweepParameter p);

struct SweepSpec {
    SweepParameter parameter = SweepParameter::Capacity;
    double from = 0.1;
    double to = 6.0;
    int steps = 60;
    MarketParams fixed{1.1, 0.0, 1.0};

    void validate() const;  // from < to, steps >= 2, range inside the domain
};

// One row per step, computed in parameter order.
std::vector<ResultRow> run_sweep(const SweepSpec& spec);

std::string sweep_csv(const std::vector<ResultRow>& rows);

}  // namespace femtomkt::cli
