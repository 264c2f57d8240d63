// Command implementations behind the CLI front end, separated so tests can
// drive them directly.
#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>

#include "cli/sweep.hpp"

namespace femtomkt::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitVerifyFailed = 1;
inline constexpr int kExitDomainError = 2;
inline constexpr int kExitSolverError = 3;
inline constexpr int kExitIoError = 4;

class IoError : public std::runtime_error {
public:
    explicit IoError(const std::string& what) : std::runtime_error(what) {}
};

struct OutputOpts {
    std::string out_path;  // empty: human-readable output only
    bool svg = false;      // sweep only; plots next to the CSV
};

int cmd_benchmark(double capacity, const OutputOpts& opts, std::ostream& out,
                  std::ostream& err);
int cmd_equilibrium(const MarketParams& params, const OutputOpts& opts, std::ostream& out,
                    std::ostream& err);
int cmd_sweep(const SweepSpec& spec, const OutputOpts& opts, std::ostream& out,
              std::ostream& err);
int cmd_boundary(double cost, double coverage, double capacity_lo, double capacity_hi,
                 double tol, std::ostream& out, std::ostream& err);
int cmd_verify(int samples, std::uint64_t seed, std::ostream& out, std::ostream& err);

}  // namespace femtomkt::cli
