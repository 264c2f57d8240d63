#include "cli/commands.hpp"

#include <fstream>
#include <iostream>

#include "cli/svg.hpp"
#include "femtomkt/bench_solver.hpp"
#include "femtomkt/oracle.hpp"
#include "femtomkt/stage1.hpp"

namespace femtomkt::cli {

namespace {

void write_file(const std::string& path, const std::string& content) {
    std::ofstream f(path, std::ios::binary);
    if (!f) {
        throw IoError("cannot open '" + path + "' for writing");
    }
    f << content;
    if (!f) {
        throw IoError("write to '" + path + "' failed");
    }
}

std::string svg_path_for(const std::string& csv_path) {
    auto dot = csv_path.find_last_of('.');
    auto slash = csv_path.find_last_of("/\\");
    if (dot == std::string::npos || (slash != std::string::npos && dot < slash)) {
        return csv_path + ".svg";
    }
    return csv_path.substr(0, dot) + ".svg";
}

template <typename Fn>
int guarded(std::ostream& err, Fn&& fn) {
    try {
        return fn();
    } catch (const IoError& e) {
        err << "error: " << e.what() << "\n";
        return kExitIoError;
    } catch (const SolverError& e) {
        err << "error: " << e.what() << "\n";
        return kExitSolverError;
    } catch (const std::domain_error& e) {
        err << "error: " << e.what() << "\n";
        return kExitDomainError;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return kExitDomainError;
    }
}

}  // namespace

int cmd_benchmark(double capacity, const OutputOpts& opts, std::ostream& out,
                  std::ostream& err) {
    return guarded(err, [&] {
        BenchmarkResult r = solve_benchmark(capacity);
        out << "p_M_bench=" << format_number(r.price) << " profit="
            << format_number(r.profit) << " served_fraction="
            << format_number(r.served_fraction) << "\n";
        if (!opts.out_path.empty()) {
            std::string csv = "B,p_M_bench,profit,served_fraction\n" +
                              format_number(capacity) + ',' + format_number(r.price) +
                              ',' + format_number(r.profit) + ',' +
                              format_number(r.served_fraction) + '\n';
            write_file(opts.out_path, csv);
        }
        return kExitOk;
    });
}

int cmd_equilibrium(const MarketParams& params, const OutputOpts& opts, std::ostream& out,
                    std::ostream& err) {
    return guarded(err, [&] {
        params.validate();
        ResultRow row = solve_row(params);
        const auto& eq = row.eq;
        out << "regime=" << to_string(eq.regime)
            << " p_M=" << format_number(eq.stage1.price_macro)
            << " p_F=" << format_number(eq.stage2.price_femto)
            << " B_F=" << format_number(eq.stage1.band_femto)
            << " B_M=" << format_number(eq.stage1.band_macro)
            << " B_R=" << format_number(eq.stage2.band_leased)
            << " theta_th=" << format_number(eq.theta_threshold)
            << " theta_tilde=" << format_number(eq.theta_preferred_macro)
            << " profit_macro=" << format_number(eq.profit_macro)
            << " profit_femto=" << format_number(eq.profit_femto)
            << " cs_dual=" << format_number(row.cs_dual)
            << " cs_bench=" << format_number(row.cs_bench)
            << " welfare_dual=" << format_number(row.welfare_dual)
            << " welfare_bench=" << format_number(row.welfare_bench) << "\n";
        if (!opts.out_path.empty()) {
            write_file(opts.out_path, std::string(kCsvHeader) + '\n' + to_csv(row));
        }
        return kExitOk;
    });
}

int cmd_sweep(const SweepSpec& spec, const OutputOpts& opts, std::ostream& out,
              std::ostream& err) {
    return guarded(err, [&] {
        if (opts.svg && opts.out_path.empty()) {
            throw std::domain_error("--svg requires --out for the CSV path");
        }
        auto rows = run_sweep(spec);
        std::string csv = sweep_csv(rows);
        if (opts.out_path.empty()) {
            out << csv;
        } else {
            write_file(opts.out_path, csv);
            out << "wrote " << rows.size() << " rows to " << opts.out_path << "\n";
        }
        if (opts.svg) {
            std::string path = svg_path_for(opts.out_path);
            write_file(path, sweep_svg(rows, spec.parameter));
            out << "wrote plots to " << path << "\n";
        }
        return kExitOk;
    });
}

int cmd_boundary(double cost, double coverage, double capacity_lo, double capacity_hi,
                 double tol, std::ostream& out, std::ostream& err) {
    return guarded(err, [&] {
        MarketParams probe{1.0, cost, coverage};
        probe.validate();
        double boundary =
            find_regime_boundary(cost, coverage, capacity_lo, capacity_hi, tol);
        char buf[32];
        std::snprintf(buf, sizeof(buf), "%.2f", boundary);
        out << "boundary=" << buf << "\n";
        return kExitOk;
    });
}

int cmd_verify(int samples, std::uint64_t seed, std::ostream& out, std::ostream& err) {
    return guarded(err, [&] {
        OracleReport report = verify_all(samples, seed);
        out << format_report(report);
        return report.ok() ? kExitOk : kExitVerifyFailed;
    });
}

}  // namespace femtomkt::cli
