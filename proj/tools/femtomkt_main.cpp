// Command-line front end: single-scenario solves, parameter sweeps, boundary
// search, and brute-force verification, with CSV and SVG emission.
#include <CLI11.hpp>
#include <json.hpp>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <string>

#include "cli/commands.hpp"

namespace {

using nlohmann::json;

// Flat key/value config mirroring the flag names; command-line flags override
// file values.
json load_config(const std::string& path) {
    std::ifstream f(path);
    if (!f) {
        throw femtomkt::cli::IoError("cannot read config file '" + path + "'");
    }
    json cfg = json::parse(f, nullptr, true, true);
    if (!cfg.is_object()) {
        throw std::domain_error("config file must contain a flat JSON object");
    }
    return cfg;
}

template <typename T>
void apply(const json& cfg, const CLI::App* cmd, const std::string& flag,
           const char* key, T& value) {
    if (cmd->count(flag) == 0 && cfg.contains(key)) {
        value = cfg.at(key).get<T>();
    }
}

}  // namespace

int main(int argc, char** argv) {
    using namespace femtomkt::cli;

    CLI::App app{"Equilibrium solver for a two-tier wireless spectrum market"};
    app.require_subcommand(1);
    app.fallthrough();  // global flags may follow the subcommand

    std::string config_path;
    OutputOpts opts;
    app.add_option("--config", config_path, "flat JSON file with default option values");
    app.add_option("--out", opts.out_path, "write results to this CSV file");
    app.add_flag("--svg", opts.svg, "emit SVG plots next to the CSV (sweep only)");

    double capacity = 1.1, cost = 0.0, coverage = 1.0;

    auto* bench = app.add_subcommand("benchmark", "no-leasing capacity-clearing price");
    bench->add_option("--B", capacity, "total bandwidth capacity");

    auto* equil = app.add_subcommand("equilibrium", "solve one scenario");
    equil->add_option("--B", capacity, "total bandwidth capacity");
    equil->add_option("--C", cost, "femtocell operational cost per unit bandwidth");
    equil->add_option("--eta", coverage, "femtocell coverage fraction");

    auto* sweep = app.add_subcommand("sweep", "solve a scenario grid and emit CSV");
    std::string param_name = "B";
    double from = 0.0, to = 0.0;
    int steps = 0;
    sweep->add_option("--param", param_name, "swept parameter: B, C or eta");
    sweep->add_option("--from", from, "sweep start");
    sweep->add_option("--to", to, "sweep end");
    sweep->add_option("--steps", steps, "number of grid points");
    sweep->add_option("--B", capacity, "fixed capacity for C/eta sweeps");
    sweep->add_option("--C", cost, "fixed cost");
    sweep->add_option("--eta", coverage, "fixed coverage");

    auto* boundary = app.add_subcommand("boundary", "capacity where leasing stops");
    double b_lo = 0.5, b_hi = 8.0, b_tol = 0.005;
    boundary->add_option("--C", cost, "femtocell operational cost");
    boundary->add_option("--eta", coverage, "femtocell coverage fraction");
    boundary->add_option("--lo", b_lo, "bracket low end (leasing expected)");
    boundary->add_option("--hi", b_hi, "bracket high end (no leasing expected)");
    boundary->add_option("--tol", b_tol, "bisection tolerance");

    auto* verify = app.add_subcommand("verify", "brute-force and Monte-Carlo checks");
    int samples = 200;
    std::uint64_t seed = 1;
    verify->add_option("--samples", samples, "number of random scenarios");
    verify->add_option("--seed", seed, "64-bit RNG seed");

    CLI11_PARSE(app, argc, argv);

    try {
        json cfg = json::object();
        if (!config_path.empty()) {
            cfg = load_config(config_path);
        }
        apply(cfg, &app, "--out", "out", opts.out_path);
        if (app.count("--svg") == 0 && cfg.contains("svg")) {
            opts.svg = cfg.at("svg").get<bool>();
        }

        if (bench->parsed()) {
            apply(cfg, bench, "--B", "B", capacity);
            return cmd_benchmark(capacity, opts, std::cout, std::cerr);
        }
        if (equil->parsed()) {
            apply(cfg, equil, "--B", "B", capacity);
            apply(cfg, equil, "--C", "C", cost);
            apply(cfg, equil, "--eta", "eta", coverage);
            return cmd_equilibrium({capacity, cost, coverage}, opts, std::cout, std::cerr);
        }
        if (sweep->parsed()) {
            apply(cfg, sweep, "--param", "param", param_name);
            apply(cfg, sweep, "--B", "B", capacity);
            apply(cfg, sweep, "--C", "C", cost);
            apply(cfg, sweep, "--eta", "eta", coverage);
            SweepSpec spec;
            spec.parameter = parse_sweep_parameter(param_name);
            spec.fixed = {capacity, cost, coverage};
            // figure-style default axes per parameter
            switch (spec.parameter) {
                case SweepParameter::Capacity: spec.from = 0.1; spec.to = 6.0; spec.steps = 60; break;
                case SweepParameter::Cost: spec.from = 0.0; spec.to = 0.9; spec.steps = 46; break;
                case SweepParameter::Coverage: spec.from = 0.1; spec.to = 1.0; spec.steps = 10; break;
            }
            if (sweep->count("--from")) spec.from = from; else apply(cfg, sweep, "--from", "from", spec.from);
            if (sweep->count("--to")) spec.to = to; else apply(cfg, sweep, "--to", "to", spec.to);
            if (sweep->count("--steps")) spec.steps = steps; else apply(cfg, sweep, "--steps", "steps", spec.steps);
            return cmd_sweep(spec, opts, std::cout, std::cerr);
        }
        if (boundary->parsed()) {
            apply(cfg, boundary, "--C", "C", cost);
            apply(cfg, boundary, "--eta", "eta", coverage);
            apply(cfg, boundary, "--lo", "lo", b_lo);
            apply(cfg, boundary, "--hi", "hi", b_hi);
            apply(cfg, boundary, "--tol", "tol", b_tol);
            return cmd_boundary(cost, coverage, b_lo, b_hi, b_tol, std::cout, std::cerr);
        }
        if (verify->parsed()) {
            apply(cfg, verify, "--samples", "samples", samples);
            apply(cfg, verify, "--seed", "seed", seed);
            return cmd_verify(samples, seed, std::cout, std::cerr);
        }
    } catch (const femtomkt::cli::IoError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitIoError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitDomainError;
    }
    return kExitOk;
}
