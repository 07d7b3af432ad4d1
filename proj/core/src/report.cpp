// SPDX-License-Identifier: Apache-2.0
//
// hetsir - SIR statistics for heterogeneous Poisson wireless networks
// Copyright (C) 2026 the hetsir authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at http://www.apache.org/licenses/LICENSE-2.0

#include "hetsir/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <set>
#include <sstream>

#include "hetsir/errors.hpp"
#include "hetsir/perf.hpp"
#include "hetsir/simulator.hpp"

namespace hetsir::cli {

namespace {

std::string format_number(double v) {
  char buffer[40];
  std::snprintf(buffer, sizeof(buffer), "%.11e", v);
  return buffer;
}

std::string format_optional(const std::optional<double>& v) {
  return v ? format_number(*v) : std::string();
}

NetworkConfig net_at(const ScenarioFile& scenario, double sweep_value) {
  NetworkConfig net = scenario.net;
  if (!scenario.has_sweep) return net;
  if (scenario.sweep.variable == "theta") {
    net.theta = sweep_value;
    return net;
  }
  // lambda1 sweep: scale every intensity, preserving the configured ratios.
  double base = scenario.net.types[0].intensity;
  for (auto& type : net.types) type.intensity *= sweep_value / base;
  return net;
}

double sweep_base_value(const ScenarioFile& scenario) {
  if (scenario.has_sweep && scenario.sweep.variable == "theta")
    return scenario.net.theta;
  return scenario.net.types[0].intensity;
}

sir::CancellationSpec cancel_spec(int L) {
  sir::CancellationSpec cancel;
  cancel.L = L;
  return cancel;
}

/// Analytic values for one metric at one network point; one entry per type,
/// or a single entry for network-level metrics.
std::vector<std::pair<int, double>> analytic_values(const NetworkConfig& net,
                                                    const MetricSpec& metric,
                                                    std::string* flags) {
  std::vector<std::pair<int, double>> out;
  const double theta = net.theta;
  switch (metric.kind) {
    case MetricKind::kSuccess:
      for (int k = 0; k < net.K(); ++k)
        out.emplace_back(k + 1, perf::success_prob(net, k, theta));
      break;
    case MetricKind::kSuccessCancel: {
      auto cancel = cancel_spec(static_cast<int>(metric.param));
      for (int k = 0; k < net.K(); ++k)
        out.emplace_back(k + 1, perf::success_prob_cancel(net, cancel, k, theta));
      break;
    }
    case MetricKind::kSuccessPc: {
      auto pc = perf::PowerControlSpec::uniform(net, metric.param);
      for (int k = 0; k < net.K(); ++k) {
        auto r = perf::success_prob_pc(net, pc, k, theta);
        if (!r.exact && flags) *flags = "pc_bounds_midpoint";
        out.emplace_back(k + 1, r.value);
      }
      break;
    }
    case MetricKind::kSuccessSimo:
      for (int k = 0; k < net.K(); ++k)
        out.emplace_back(k + 1, perf::success_prob_simo(
                                    net, k, static_cast<int>(metric.param), theta));
      break;
    case MetricKind::kCapacity:
      for (int k = 0; k < net.K(); ++k)
        out.emplace_back(k + 1, perf::ergodic_capacity(net, k));
      break;
    case MetricKind::kCapacityCancel: {
      auto cancel = cancel_spec(static_cast<int>(metric.param));
      for (int k = 0; k < net.K(); ++k)
        out.emplace_back(k + 1, perf::ergodic_capacity_cancel(net, cancel, k));
      break;
    }
    case MetricKind::kCapacityPc: {
      auto pc = perf::PowerControlSpec::uniform(net, metric.param);
      for (int k = 0; k < net.K(); ++k)
        out.emplace_back(k + 1, perf::ergodic_capacity_pc(net, pc, k).value);
      break;
    }
    case MetricKind::kCapacitySimo:
      for (int k = 0; k < net.K(); ++k)
        out.emplace_back(k + 1, perf::ergodic_capacity_simo(
                                    net, k, static_cast<int>(metric.param)));
      break;
    case MetricKind::kThroughput:
      out.emplace_back(0, perf::throughput_capacity(net).total);
      break;
    case MetricKind::kThroughputCancel: {
      perf::ThroughputOptions options;
      options.cancel = cancel_spec(static_cast<int>(metric.param));
      out.emplace_back(0, perf::throughput_capacity(net, options).total);
      break;
    }
    case MetricKind::kThroughputPc: {
      perf::ThroughputOptions options;
      options.pc = perf::PowerControlSpec::uniform(net, metric.param);
      out.emplace_back(0, perf::throughput_capacity(net, options).total);
      break;
    }
    case MetricKind::kFractionalMoment:
      for (int k = 0; k < net.K(); ++k)
        out.emplace_back(k + 1, sir::sir_fractional_moment(net, k, metric.param));
      break;
    case MetricKind::kLaplace:
      out.emplace_back(0, sir::laplace_interference(net, metric.param));
      break;
  }
  return out;
}

struct McPoint {
  std::map<std::pair<int, int>, mc::Estimate> estimates;  // (metric, type)
  std::set<int> sentinel_flagged;  // metric indices with frequent +inf draws
};

/// Monte Carlo estimates for every metric at one network point. Metrics that
/// share a draw model reuse a single batch pass. Metrics whose batch saw
/// +inf SIR sentinels (finite-window artifact) above one draw in 1e4 are
/// flagged so the rows carry the warning.
McPoint mc_values(const ScenarioFile& scenario, const NetworkConfig& net,
                  const RunOptions& options) {
  mc::SimScenario base;
  base.net = net;
  base.replications =
      options.replications ? *options.replications : scenario.sim.replications;
  base.seed = options.seed ? *options.seed : scenario.sim.seed;
  base.window_radius = scenario.sim.window;
  base.threads = options.threads;

  const auto& metrics = scenario.outputs.metrics;
  McPoint out;

  // Plain-network pass: success/capacity with enough cancellation levels,
  // plus any fractional-moment and transform estimators.
  int l_max = 0;
  bool want_capacity = false;
  bool want_success = false;
  std::vector<double> deltas;
  std::vector<double> laplace_s;
  for (const auto& m : metrics) {
    switch (m.kind) {
      case MetricKind::kSuccess:
        want_success = true;
        break;
      case MetricKind::kSuccessCancel:
        want_success = true;
        l_max = std::max(l_max, static_cast<int>(m.param));
        break;
      case MetricKind::kCapacity:
        want_capacity = true;
        break;
      case MetricKind::kCapacityCancel:
        want_capacity = true;
        l_max = std::max(l_max, static_cast<int>(m.param));
        break;
      case MetricKind::kFractionalMoment:
        deltas.push_back(m.param);
        break;
      case MetricKind::kLaplace:
        laplace_s.push_back(m.param);
        break;
      default:
        break;
    }
  }
  if (want_success || want_capacity || !deltas.empty() || !laplace_s.empty()) {
    mc::SimScenario plain = base;
    plain.cancel_max = l_max;
    mc::BatchSpec spec;
    spec.theta = net.theta;
    spec.want_success = want_success;
    spec.want_capacity = want_capacity;
    if (!deltas.empty()) spec.fractional_delta = deltas.front();
    spec.laplace_s = laplace_s;
    mc::BatchResult batch = mc::run_batch(plain, spec);
    bool sentinel_heavy =
        batch.infinite_sir_draws >
        1e-4 * static_cast<double>(plain.replications) * net.K() * (l_max + 1);

    int laplace_seen = 0;
    for (std::size_t i = 0; i < metrics.size(); ++i) {
      const MetricSpec& m = metrics[i];
      int idx = static_cast<int>(i);
      switch (m.kind) {
        case MetricKind::kSuccess:
          for (int k = 0; k < net.K(); ++k)
            out.estimates[{idx, k + 1}] = batch.success[k][0];
          break;
        case MetricKind::kSuccessCancel:
          for (int k = 0; k < net.K(); ++k)
            out.estimates[{idx, k + 1}] = batch.success[k][static_cast<int>(m.param)];
          break;
        case MetricKind::kCapacity:
          for (int k = 0; k < net.K(); ++k)
            out.estimates[{idx, k + 1}] = batch.capacity[k][0];
          break;
        case MetricKind::kCapacityCancel:
          for (int k = 0; k < net.K(); ++k)
            out.estimates[{idx, k + 1}] = batch.capacity[k][static_cast<int>(m.param)];
          break;
        case MetricKind::kFractionalMoment:
          if (m.param == spec.fractional_delta)
            for (int k = 0; k < net.K(); ++k)
              out.estimates[{idx, k + 1}] = batch.fractional_moment[k][0];
          break;
        case MetricKind::kLaplace:
          out.estimates[{idx, 0}] = batch.laplace[laplace_seen++][0];
          break;
        default:
          break;
      }
      if (sentinel_heavy && out.estimates.count({idx, m.network_level() ? 0 : 1}))
        out.sentinel_flagged.insert(idx);
    }
    // Extra passes for additional fractional-moment deltas.
    for (std::size_t i = 0; i < metrics.size(); ++i) {
      const MetricSpec& m = metrics[i];
      if (m.kind != MetricKind::kFractionalMoment || m.param == spec.fractional_delta)
        continue;
      mc::SimScenario extra = plain;
      mc::BatchSpec espec;
      espec.want_success = false;
      espec.fractional_delta = m.param;
      mc::BatchResult ebatch = mc::run_batch(extra, espec);
      for (int k = 0; k < net.K(); ++k)
        out.estimates[{static_cast<int>(i), k + 1}] = ebatch.fractional_moment[k][0];
    }
  }

  // One pass per distinct power-control exponent.
  for (std::size_t i = 0; i < metrics.size(); ++i) {
    const MetricSpec& m = metrics[i];
    if (m.kind != MetricKind::kSuccessPc && m.kind != MetricKind::kCapacityPc)
      continue;
    mc::SimScenario pc = base;
    pc.power_control = true;
    for (auto& type : pc.net.types) type.pc_exponent = m.param;
    mc::BatchSpec spec;
    spec.theta = net.theta;
    spec.want_success = m.kind == MetricKind::kSuccessPc;
    spec.want_capacity = m.kind == MetricKind::kCapacityPc;
    mc::BatchResult batch = mc::run_batch(pc, spec);
    if (batch.infinite_sir_draws > 1e-4 * static_cast<double>(pc.replications) * net.K())
      out.sentinel_flagged.insert(static_cast<int>(i));
    for (int k = 0; k < net.K(); ++k)
      out.estimates[{static_cast<int>(i), k + 1}] =
          m.kind == MetricKind::kSuccessPc ? batch.success[k][0]
                                           : batch.capacity[k][0];
  }

  // One pass per distinct SIMO antenna count.
  for (std::size_t i = 0; i < metrics.size(); ++i) {
    const MetricSpec& m = metrics[i];
    if (m.kind != MetricKind::kSuccessSimo && m.kind != MetricKind::kCapacitySimo)
      continue;
    mc::SimScenario simo = base;
    simo.simo = true;
    for (auto& type : simo.net.types)
      type.rx_antennas = static_cast<int>(m.param);
    mc::BatchSpec spec;
    spec.theta = net.theta;
    spec.want_success = m.kind == MetricKind::kSuccessSimo;
    spec.want_capacity = m.kind == MetricKind::kCapacitySimo;
    mc::BatchResult batch = mc::run_batch(simo, spec);
    if (batch.infinite_sir_draws > 1e-4 * static_cast<double>(simo.replications) * net.K())
      out.sentinel_flagged.insert(static_cast<int>(i));
    for (int k = 0; k < net.K(); ++k)
      out.estimates[{static_cast<int>(i), k + 1}] =
          m.kind == MetricKind::kSuccessSimo ? batch.success[k][0]
                                             : batch.capacity[k][0];
  }

  // Throughput estimators run on their own pass per variant.
  for (std::size_t i = 0; i < metrics.size(); ++i) {
    const MetricSpec& m = metrics[i];
    if (!m.network_level() || m.kind == MetricKind::kLaplace) continue;
    mc::SimScenario tp = base;
    if (m.kind == MetricKind::kThroughputCancel)
      tp.cancel_max = static_cast<int>(m.param);
    if (m.kind == MetricKind::kThroughputPc) {
      tp.power_control = true;
      for (auto& type : tp.net.types) type.pc_exponent = m.param;
    }
    out.estimates[{static_cast<int>(i), 0}] = mc::estimate_throughput(tp, net.theta);
  }
  return out;
}

std::vector<ResultRow> rows_for_point(const ScenarioFile& scenario,
                                      double sweep_value, bool analytic,
                                      bool monte_carlo,
                                      const RunOptions& options) {
  NetworkConfig net = net_at(scenario, sweep_value);
  std::vector<ResultRow> rows;
  McPoint mc_point;
  if (monte_carlo) mc_point = mc_values(scenario, net, options);

  for (std::size_t i = 0; i < scenario.outputs.metrics.size(); ++i) {
    const MetricSpec& metric = scenario.outputs.metrics[i];
    std::string flags;
    std::vector<std::pair<int, double>> values;
    if (analytic) {
      values = analytic_values(net, metric, &flags);
    } else {
      // Row skeleton only: one row per type or one network row.
      if (metric.network_level()) {
        values.emplace_back(0, 0.0);
      } else {
        for (int k = 0; k < net.K(); ++k) values.emplace_back(k + 1, 0.0);
      }
    }
    for (const auto& [type_index, value] : values) {
      ResultRow row;
      row.sweep_value = sweep_value;
      row.type_index = type_index;
      row.metric = metric.name;
      row.flags = flags;
      if (analytic) row.analytic = value;
      auto it = mc_point.estimates.find({static_cast<int>(i), type_index});
      if (it != mc_point.estimates.end()) {
        row.mc_mean = it->second.mean;
        row.mc_stderr = it->second.stderr_;
        if (mc_point.sentinel_flagged.count(static_cast<int>(i))) {
          if (!row.flags.empty()) row.flags += ';';
          row.flags += "inf_sir";
        }
      }
      if (row.analytic && row.mc_mean) {
        double denom = std::max(std::fabs(*row.analytic), 1e-300);
        row.rel_err = std::fabs(*row.analytic - *row.mc_mean) / denom;
      }
      rows.push_back(std::move(row));
    }
  }
  return rows;
}

}  // namespace

std::string rows_to_csv(const std::vector<ResultRow>& rows) {
  std::ostringstream out;
  out << "sweep_value,type_index,metric_name,analytic,mc_mean,mc_stderr,"
         "rel_err,flags\n";
  for (const auto& row : rows) {
    out << format_number(row.sweep_value) << ',' << row.type_index << ','
        << row.metric << ',' << format_optional(row.analytic) << ','
        << format_optional(row.mc_mean) << ','
        << format_optional(row.mc_stderr) << ','
        << format_optional(row.rel_err) << ',' << row.flags << '\n';
  }
  return out.str();
}

std::vector<ResultRow> csv_to_rows(const std::string& text) {
  std::vector<ResultRow> rows;
  std::istringstream in(text);
  std::string line;
  if (!std::getline(in, line)) throw ParseError("csv: empty input");
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::vector<std::string> fields;
    std::string field;
    std::istringstream ls(line);
    while (std::getline(ls, field, ',')) fields.push_back(field);
    while (fields.size() < 8) fields.emplace_back();
    if (fields.size() != 8) throw ParseError("csv: wrong column count: " + line);
    ResultRow row;
    row.sweep_value = std::stod(fields[0]);
    row.type_index = std::stoi(fields[1]);
    row.metric = fields[2];
    auto opt = [](const std::string& s) {
      return s.empty() ? std::optional<double>() : std::optional<double>(std::stod(s));
    };
    row.analytic = opt(fields[3]);
    row.mc_mean = opt(fields[4]);
    row.mc_stderr = opt(fields[5]);
    row.rel_err = opt(fields[6]);
    row.flags = fields[7];
    rows.push_back(std::move(row));
  }
  return rows;
}

double metric_rel_tolerance(MetricKind kind) {
  switch (kind) {
    case MetricKind::kThroughput:
    case MetricKind::kThroughputCancel:
    case MetricKind::kThroughputPc:
    case MetricKind::kFractionalMoment:
      return 0.02;
    default:
      return 0.01;
  }
}

std::vector<ResultRow> run_eval(const ScenarioFile& scenario,
                                const RunOptions& options) {
  return rows_for_point(scenario, sweep_base_value(scenario), true, false,
                        options);
}

std::vector<ResultRow> run_sim(const ScenarioFile& scenario,
                               const RunOptions& options) {
  return rows_for_point(scenario, sweep_base_value(scenario), false, true,
                        options);
}

CompareOutcome run_compare(const ScenarioFile& scenario,
                           const RunOptions& options) {
  CompareOutcome outcome;
  outcome.rows = rows_for_point(scenario, sweep_base_value(scenario), true,
                                true, options);
  for (const auto& row : outcome.rows) {
    if (!row.analytic || !row.mc_mean || !row.mc_stderr) continue;
    double deviation = std::fabs(*row.analytic - *row.mc_mean);
    double four_sigma = 4.0 * *row.mc_stderr;
    double tol = metric_rel_tolerance(parse_metric(row.metric).kind);
    bool breach = deviation > four_sigma && row.rel_err && *row.rel_err > tol;
    if (breach) {
      std::ostringstream msg;
      msg << row.metric << " type " << row.type_index << ": analytic "
          << *row.analytic << " vs mc " << *row.mc_mean << " (stderr "
          << *row.mc_stderr << ", rel_err " << *row.rel_err << ")";
      outcome.breaches.push_back(msg.str());
    }
  }
  return outcome;
}

std::vector<ResultRow> run_sweep(const ScenarioFile& scenario,
                                 const RunOptions& options) {
  if (!scenario.has_sweep)
    throw ParseError("sweep: scenario has no sweep section");
  const bool with_mc = options.replications && *options.replications > 0;
  std::vector<ResultRow> rows;
  for (double value : scenario.sweep.grid) {
    auto point_rows = rows_for_point(scenario, value, true, with_mc, options);
    rows.insert(rows.end(), point_rows.begin(), point_rows.end());
  }
  return rows;
}

void write_output(const std::vector<ResultRow>& rows, const std::string& path) {
  std::string csv = rows_to_csv(rows);
  if (path.empty()) {
    std::cout << csv;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot open output file '" + path + "'");
  out << csv;
}

}  // namespace hetsir::cli
