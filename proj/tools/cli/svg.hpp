// Minimal static SVG line plots for sweep results; derived artifacts only,
// never an interchange format.
#pragma once

#include <string>
#include <vector>

#include "cli/sweep.hpp"

namespace femtomkt::cli {

std::string sweep_svg(const std::vector<ResultRow>& rows, SweepParameter parameter);

}  // namespace femtomkt::cli
