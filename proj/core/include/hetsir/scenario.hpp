// SPDX-License-Identifier: Apache-2.0
//
// hetsir - SIR statistics for heterogeneous Poisson wireless networks
// Copyright (C) 2026 the hetsir authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at http://www.apache.org/licenses/LICENSE-2.0

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "hetsir/model.hpp"

namespace hetsir::cli {

enum class MetricKind {
  kSuccess,
  kSuccessCancel,
  kSuccessPc,
  kSuccessSimo,
  kCapacity,
  kCapacityCancel,
  kCapacityPc,
  kCapacitySimo,
  kThroughput,
  kThroughputCancel,
  kThroughputPc,
  kFractionalMoment,
  kLaplace,
};

/// One requested metric, e.g. "success_cancel:2" or "capacity_pc:0.5".
struct MetricSpec {
  MetricKind kind = MetricKind::kSuccess;
  double param = 0.0;  // L, gamma, M_r, delta or s depending on the kind
  std::string name;    // canonical spelling, used in the CSV metric column

  bool network_level() const {
    return kind == MetricKind::kThroughput ||
           kind == MetricKind::kThroughputCancel ||
           kind == MetricKind::kThroughputPc ||
           kind == MetricKind::kLaplace;
  }
};

MetricSpec parse_metric(const std::string& text);

struct SweepSpec {
  std::string variable = "lambda1";  // lambda1 | theta
  std::vector<double> grid;
};

struct SimulationSpec {
  long replications = 20000;
  std::uint64_t seed = 20260808;
  double window = 0.0;  // 0 = auto
};

struct OutputSpec {
  std::vector<MetricSpec> metrics;
  std::string csv_path;  // empty = stdout
};

/// Parsed scenario document. Parsing is strict: unknown keys anywhere in the
/// document are rejected with a path-qualified error.
struct ScenarioFile {
  NetworkConfig net;
  bool has_sweep = false;
  SweepSpec sweep;
  SimulationSpec sim;
  OutputSpec outputs;
};

ScenarioFile parse_scenario_text(const std::string& json_text);
ScenarioFile load_scenario(const std::string& path);

/// Canonical JSON serialization; parse(serialize(x)) reproduces x exactly.
std::string serialize_scenario(const ScenarioFile& scenario);

/// Built-in presets: "table1", "table1-nofading", "table1-simo4",
/// "table1-pc" (optionally "table1-pc=<gamma>").
ScenarioFile preset_scenario(const std::string& name);
std::vector<std::string> preset_names();

}  // namespace hetsir::cli
