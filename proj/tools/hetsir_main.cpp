// SPDX-License-Identifier: Apache-2.0
//
// hetsir - SIR statistics for heterogeneous Poisson wireless networks
// Copyright (C) 2026 the hetsir authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at http://www.apache.org/licenses/LICENSE-2.0

#include <cstdlib>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "hetsir/errors.hpp"
#include "hetsir/report.hpp"
#include "hetsir/scenario.hpp"

namespace {

// Exit codes: 0 success, 2 parse/configuration error, 3 tolerance breach,
// 4 numerical convergence or accuracy failure.
constexpr int kExitParse = 2;
constexpr int kExitTolerance = 3;
constexpr int kExitNumerical = 4;

struct CommonArgs {
  std::string scenario_path;
  std::string preset;
  std::string out;
  std::uint64_t seed = 0;
  bool seed_set = false;
  long replications = -1;
  int threads = 0;
};

void add_common(CLI::App* cmd, CommonArgs& args) {
  auto* scenario =
      cmd->add_option("--scenario", args.scenario_path, "Scenario JSON file");
  auto* preset = cmd->add_option(
      "--preset", args.preset,
      "Built-in scenario: table1, table1-nofading, table1-simo4, table1-pc[=g]");
  scenario->excludes(preset);
  cmd->add_option("--seed", args.seed, "Override the scenario RNG seed")
      ->each([&args](const std::string&) { args.seed_set = true; });
  cmd->add_option("--out", args.out, "Write CSV here instead of stdout");
  cmd->add_option("--replications", args.replications,
                  "Override Monte Carlo replication count (enables MC in sweep)");
  cmd->add_option("--threads", args.threads,
                  "Worker threads (default: HETSIR_THREADS or hardware)")
      ->envname("HETSIR_THREADS");
}

hetsir::cli::ScenarioFile load(const CommonArgs& args) {
  if (!args.preset.empty()) return hetsir::cli::preset_scenario(args.preset);
  if (!args.scenario_path.empty())
    return hetsir::cli::load_scenario(args.scenario_path);
  throw hetsir::ParseError("either --scenario or --preset is required");
}

hetsir::cli::RunOptions options_from(const CommonArgs& args) {
  hetsir::cli::RunOptions options;
  if (args.seed_set) options.seed = args.seed;
  if (args.replications >= 0) options.replications = args.replications;
  options.threads = args.threads;
  options.out_path = args.out;
  return options;
}

void emit(const std::vector<hetsir::cli::ResultRow>& rows,
          const hetsir::cli::ScenarioFile& scenario,
          const hetsir::cli::RunOptions& options) {
  const std::string& path =
      options.out_path.empty() ? scenario.outputs.csv_path : options.out_path;
  hetsir::cli::write_output(rows, path);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "hetsir: analytic SIR/capacity metrics for K-type Poisson wireless "
      "networks, cross-validated by a built-in Monte Carlo simulator"};
  app.require_subcommand(1);

  CommonArgs eval_args, sim_args, compare_args, sweep_args;
  CLI::App* cmd_eval =
      app.add_subcommand("eval", "Analytic metrics at the base configuration");
  add_common(cmd_eval, eval_args);
  CLI::App* cmd_sim =
      app.add_subcommand("sim", "Monte Carlo metrics at the base configuration");
  add_common(cmd_sim, sim_args);
  CLI::App* cmd_compare = app.add_subcommand(
      "compare", "Analytic vs Monte Carlo with tolerance checking");
  add_common(cmd_compare, compare_args);
  CLI::App* cmd_sweep = app.add_subcommand(
      "sweep", "Metrics across the sweep grid (MC with --replications)");
  add_common(cmd_sweep, sweep_args);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : kExitParse;
  }

  try {
    if (cmd_eval->parsed()) {
      auto scenario = load(eval_args);
      auto options = options_from(eval_args);
      emit(hetsir::cli::run_eval(scenario, options), scenario, options);
    } else if (cmd_sim->parsed()) {
      auto scenario = load(sim_args);
      auto options = options_from(sim_args);
      emit(hetsir::cli::run_sim(scenario, options), scenario, options);
    } else if (cmd_compare->parsed()) {
      auto scenario = load(compare_args);
      auto options = options_from(compare_args);
      auto outcome = hetsir::cli::run_compare(scenario, options);
      emit(outcome.rows, scenario, options);
      if (!outcome.breaches.empty()) {
        for (const auto& breach : outcome.breaches)
          std::cerr << "tolerance breach: " << breach << "\n";
        return kExitTolerance;
      }
    } else if (cmd_sweep->parsed()) {
      auto scenario = load(sweep_args);
      auto options = options_from(sweep_args);
      emit(hetsir::cli::run_sweep(scenario, options), scenario, options);
    }
  } catch (const hetsir::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitParse;
  } catch (const hetsir::DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitParse;
  } catch (const hetsir::DivergenceError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitParse;
  } catch (const hetsir::ConvergenceError& e) {
    std::cerr << "numerical error: " << e.what() << "\n";
    return kExitNumerical;
  } catch (const hetsir::AccuracyError& e) {
    std::cerr << "numerical error: " << e.what() << "\n";
    return kExitNumerical;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
