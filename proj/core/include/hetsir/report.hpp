// SPDX-License-Identifier: Apache-2.0
//
// hetsir - SIR statistics for heterogeneous Poisson wireless networks
// Copyright (C) 2026 the hetsir authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at http://www.apache.org/licenses/LICENSE-2.0

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hetsir/scenario.hpp"

namespace hetsir::cli {

/// One output record. type_index is 1-based; 0 marks network-level metrics
/// (throughput, interference transform).
struct ResultRow {
  double sweep_value = 0.0;
  int type_index = 0;
  std::string metric;
  std::optional<double> analytic;
  std::optional<double> mc_mean;
  std::optional<double> mc_stderr;
  std::optional<double> rel_err;
  std::string flags;

  bool operator==(const ResultRow&) const = default;
};

struct RunOptions {
  std::optional<std::uint64_t> seed;
  std::optional<long> replications;
  int threads = 0;
  std::string out_path;  // overrides the scenario's outputs.csv
};

/// CSV with the fixed column order
/// sweep_value,type_index,metric_name,analytic,mc_mean,mc_stderr,rel_err,flags
/// and 12-significant-digit scientific formatting of every number.
std::string rows_to_csv(const std::vector<ResultRow>& rows);
std::vector<ResultRow> csv_to_rows(const std::string& text);

/// Per-metric relative tolerance used by compare.
double metric_rel_tolerance(MetricKind kind);

/// Analytic values at the scenario's base configuration.
std::vector<ResultRow> run_eval(const ScenarioFile& scenario,
                                const RunOptions& options = {});

/// Monte Carlo values at the base configuration.
std::vector<ResultRow> run_sim(const ScenarioFile& scenario,
                               const RunOptions& options = {});

struct CompareOutcome {
  std::vector<ResultRow> rows;
  std::vector<std::string> breaches;  // human-readable offending rows
};

/// Analytic and Monte Carlo side by side. A row breaches only when the
/// deviation exceeds 4 standard errors AND the per-metric relative
/// tolerance (sigma-scaled acceptance).
CompareOutcome run_compare(const ScenarioFile& scenario,
                           const RunOptions& options = {});

/// Rows across the sweep grid. Analytic always; Monte Carlo only when
/// options.replications is set (sweep simulation is opt-in by design so the
/// default sweep output is platform-stable).
std::vector<ResultRow> run_sweep(const ScenarioFile& scenario,
                                 const RunOptions& options = {});

/// Writes CSV to the path, or stdout when the path is empty.
void write_output(const std::vector<ResultRow>& rows, const std::string& path);

}  // namespace hetsir::cli
