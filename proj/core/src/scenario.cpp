// SPDX-License-Identifier: Apache-2.0
//
// hetsir - SIR statistics for heterogeneous Poisson wireless networks
// Copyright (C) 2026 the hetsir authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at http://www.apache.org/licenses/LICENSE-2.0

#include "hetsir/scenario.hpp"

#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "hetsir/errors.hpp"

namespace hetsir::cli {

namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& path, const std::string& what) {
  throw ParseError("scenario: " + path + ": " + what);
}

void require_keys(const json& obj, const std::string& path,
                  const std::set<std::string>& allowed,
                  const std::set<std::string>& required) {
  if (!obj.is_object()) fail(path, "expected an object");
  for (const auto& [key, value] : obj.items()) {
    (void)value;
    if (!allowed.count(key)) fail(path + "/" + key, "unknown key");
  }
  for (const auto& key : required)
    if (!obj.contains(key)) fail(path, "missing required key '" + key + "'");
}

double get_number(const json& obj, const std::string& path, const std::string& key) {
  const auto& v = obj.at(key);
  if (!v.is_number()) fail(path + "/" + key, "expected a number");
  return v.get<double>();
}

DistributionSpec parse_distribution(const json& obj, const std::string& path) {
  require_keys(obj, path, {"kind", "value", "mean", "shape"}, {"kind"});
  std::string kind = obj.at("kind").get<std::string>();
  if (kind == "constant") {
    require_keys(obj, path, {"kind", "value"}, {"kind", "value"});
    return DistributionSpec::constant(get_number(obj, path, "value"));
  }
  if (kind == "exponential") {
    require_keys(obj, path, {"kind", "mean"}, {"kind", "mean"});
    return DistributionSpec::exponential(get_number(obj, path, "mean"));
  }
  if (kind == "gamma") {
    require_keys(obj, path, {"kind", "shape", "mean"}, {"kind", "shape", "mean"});
    return DistributionSpec::gamma(get_number(obj, path, "shape"),
                                   get_number(obj, path, "mean"));
  }
  if (kind == "erlang") {
    require_keys(obj, path, {"kind", "shape", "mean"}, {"kind", "shape", "mean"});
    double shape = get_number(obj, path, "shape");
    if (shape != std::floor(shape))
      fail(path + "/shape", "erlang shape must be integer");
    return DistributionSpec::erlang(static_cast<int>(shape),
                                    get_number(obj, path, "mean"));
  }
  fail(path + "/kind", "unknown distribution kind '" + kind + "'");
}

json distribution_to_json(const DistributionSpec& spec) {
  json out;
  switch (spec.kind()) {
    case DistKind::kConstant:
      out["kind"] = "constant";
      out["value"] = spec.mean();
      break;
    case DistKind::kExponential:
      out["kind"] = "exponential";
      out["mean"] = spec.mean();
      break;
    case DistKind::kGamma:
      out["kind"] = "gamma";
      out["shape"] = spec.shape();
      out["mean"] = spec.mean();
      break;
    case DistKind::kErlang:
      out["kind"] = "erlang";
      out["shape"] = static_cast<int>(spec.shape());
      out["mean"] = spec.mean();
      break;
  }
  return out;
}

std::vector<double> parse_grid(const json& obj, const std::string& path) {
  if (obj.contains("values")) {
    require_keys(obj, path, {"variable", "values"}, {"values"});
    std::vector<double> grid;
    for (const auto& v : obj.at("values")) grid.push_back(v.get<double>());
    return grid;
  }
  require_keys(obj, path, {"variable", "from", "to", "points", "scale"},
               {"from", "to", "points"});
  double from = get_number(obj, path, "from");
  double to = get_number(obj, path, "to");
  int points = obj.at("points").get<int>();
  std::string scale = obj.value("scale", std::string("log"));
  if (points < 0) fail(path + "/points", "points must be >= 0");
  std::vector<double> grid;
  if (points == 0) return grid;
  if (points == 1) return {from};
  for (int i = 0; i < points; ++i) {
    double t = static_cast<double>(i) / (points - 1);
    if (scale == "log") {
      if (!(from > 0.0 && to > 0.0)) fail(path, "log scale needs positive bounds");
      grid.push_back(std::pow(
          10.0, std::log10(from) + t * (std::log10(to) - std::log10(from))));
    } else if (scale == "linear") {
      grid.push_back(from + t * (to - from));
    } else {
      fail(path + "/scale", "scale must be 'log' or 'linear'");
    }
  }
  return grid;
}

ScenarioFile table1_base(bool rayleigh) {
  ScenarioFile scenario;
  auto fading = rayleigh ? DistributionSpec::exponential(1.0)
                         : DistributionSpec::constant(1.0);
  const double l1 = 1e-4;
  const double powers[3] = {1.0, 0.5, 0.05};
  const double ratios[3] = {1.0, 5.0, 10.0};
  for (int k = 0; k < 3; ++k) {
    TypeClassConfig type;
    type.intensity = ratios[k] * l1;
    type.power = DistributionSpec::constant(powers[k]);
    type.fading = fading;
    type.distance = DistributionSpec::constant(10.0);
    scenario.net.types.push_back(type);
  }
  scenario.net.alpha = 4.0;
  scenario.net.theta = 1.0;
  scenario.has_sweep = true;
  scenario.sweep.variable = "lambda1";
  for (int i = 0; i < 17; ++i)
    scenario.sweep.grid.push_back(std::pow(10.0, -5.0 + 2.0 * i / 16.0));
  scenario.sim.replications = 20000;
  scenario.sim.seed = 20260808;
  return scenario;
}

void add_metrics(ScenarioFile& scenario,
                 std::initializer_list<const char*> names) {
  for (const char* name : names)
    scenario.outputs.metrics.push_back(parse_metric(name));
}

}  // namespace

MetricSpec parse_metric(const std::string& text) {
  MetricSpec spec;
  spec.name = text;
  std::string head = text;
  std::string arg;
  if (auto pos = text.find(':'); pos != std::string::npos) {
    head = text.substr(0, pos);
    arg = text.substr(pos + 1);
  }
  auto need_arg = [&](const char* what) {
    if (arg.empty())
      throw ParseError("metric '" + text + "' needs a parameter (" +
                       std::string(what) + ")");
    try {
      return std::stod(arg);
    } catch (const std::exception&) {
      throw ParseError("metric '" + text + "': bad parameter '" + arg + "'");
    }
  };

  if (head == "success") {
    spec.kind = MetricKind::kSuccess;
  } else if (head == "success_cancel") {
    spec.kind = MetricKind::kSuccessCancel;
    spec.param = need_arg("L");
  } else if (head == "success_pc") {
    spec.kind = MetricKind::kSuccessPc;
    spec.param = need_arg("gamma");
  } else if (head == "success_simo") {
    spec.kind = MetricKind::kSuccessSimo;
    spec.param = need_arg("M_r");
  } else if (head == "capacity") {
    spec.kind = MetricKind::kCapacity;
  } else if (head == "capacity_cancel") {
    spec.kind = MetricKind::kCapacityCancel;
    spec.param = need_arg("L");
  } else if (head == "capacity_pc") {
    spec.kind = MetricKind::kCapacityPc;
    spec.param = need_arg("gamma");
  } else if (head == "capacity_simo") {
    spec.kind = MetricKind::kCapacitySimo;
    spec.param = need_arg("M_r");
  } else if (head == "throughput") {
    spec.kind = MetricKind::kThroughput;
  } else if (head == "throughput_cancel") {
    spec.kind = MetricKind::kThroughputCancel;
    spec.param = need_arg("L");
  } else if (head == "throughput_pc") {
    spec.kind = MetricKind::kThroughputPc;
    spec.param = need_arg("gamma");
  } else if (head == "fractional_moment") {
    spec.kind = MetricKind::kFractionalMoment;
    spec.param = need_arg("delta");
  } else if (head == "laplace") {
    spec.kind = MetricKind::kLaplace;
    spec.param = need_arg("s");
  } else {
    throw ParseError("unknown metric '" + text + "'");
  }

  if ((spec.kind == MetricKind::kSuccessCancel ||
       spec.kind == MetricKind::kCapacityCancel ||
       spec.kind == MetricKind::kThroughputCancel) &&
      (spec.param < 1 || spec.param != std::floor(spec.param)))
    throw ParseError("metric '" + text + "': L must be a positive integer");
  if ((spec.kind == MetricKind::kSuccessSimo ||
       spec.kind == MetricKind::kCapacitySimo) &&
      (spec.param < 1 || spec.param != std::floor(spec.param)))
    throw ParseError("metric '" + text + "': M_r must be a positive integer");
  return spec;
}

ScenarioFile parse_scenario_text(const std::string& json_text) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("scenario: ") + e.what());
  }
  require_keys(doc, "", {"network", "sweep", "simulation", "outputs"},
               {"network"});

  ScenarioFile out;
  out.net.types.clear();
  const json& network = doc.at("network");
  require_keys(network, "network", {"alpha", "theta", "types", "cancel"},
               {"alpha", "theta", "types"});
  out.net.alpha = get_number(network, "network", "alpha");
  out.net.theta = get_number(network, "network", "theta");
  if (network.contains("cancel"))
    out.net.cancel_count = network.at("cancel").get<int>();
  if (!network.at("types").is_array() || network.at("types").empty())
    fail("network/types", "expected a non-empty array");
  int index = 0;
  for (const auto& t : network.at("types")) {
    std::string path = "network/types[" + std::to_string(index++) + "]";
    require_keys(
        t, path,
        {"intensity", "power", "fading", "distance", "gamma", "antennas"},
        {"intensity", "power", "fading", "distance"});
    TypeClassConfig type;
    type.intensity = get_number(t, path, "intensity");
    type.power = parse_distribution(t.at("power"), path + "/power");
    type.fading = parse_distribution(t.at("fading"), path + "/fading");
    type.distance = parse_distribution(t.at("distance"), path + "/distance");
    if (t.contains("gamma")) type.pc_exponent = get_number(t, path, "gamma");
    if (t.contains("antennas")) type.rx_antennas = t.at("antennas").get<int>();
    out.net.types.push_back(type);
  }
  out.net = out.net.validated();

  if (doc.contains("sweep")) {
    out.has_sweep = true;
    const json& sweep = doc.at("sweep");
    out.sweep.variable = sweep.value("variable", std::string("lambda1"));
    if (out.sweep.variable != "lambda1" && out.sweep.variable != "theta")
      fail("sweep/variable", "must be 'lambda1' or 'theta'");
    out.sweep.grid = parse_grid(sweep, "sweep");
  }
  if (doc.contains("simulation")) {
    const json& sim = doc.at("simulation");
    require_keys(sim, "simulation", {"replications", "seed", "window"}, {});
    if (sim.contains("replications"))
      out.sim.replications = sim.at("replications").get<long>();
    if (sim.contains("seed")) out.sim.seed = sim.at("seed").get<std::uint64_t>();
    if (sim.contains("window"))
      out.sim.window = get_number(sim, "simulation", "window");
  }
  if (doc.contains("outputs")) {
    const json& outputs = doc.at("outputs");
    require_keys(outputs, "outputs", {"metrics", "csv"}, {"metrics"});
    for (const auto& m : outputs.at("metrics"))
      out.outputs.metrics.push_back(parse_metric(m.get<std::string>()));
    if (outputs.contains("csv"))
      out.outputs.csv_path = outputs.at("csv").get<std::string>();
  } else {
    out.outputs.metrics.push_back(parse_metric("success"));
  }
  return out;
}

ScenarioFile load_scenario(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open scenario file '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_scenario_text(buffer.str());
}

std::string serialize_scenario(const ScenarioFile& scenario) {
  json doc;
  json types = json::array();
  for (const auto& t : scenario.net.types) {
    json type;
    type["intensity"] = t.intensity;
    type["power"] = distribution_to_json(t.power);
    type["fading"] = distribution_to_json(t.fading);
    type["distance"] = distribution_to_json(t.distance);
    type["gamma"] = t.pc_exponent;
    type["antennas"] = t.rx_antennas;
    types.push_back(type);
  }
  doc["network"] = {{"alpha", scenario.net.alpha},
                    {"theta", scenario.net.theta},
                    {"cancel", scenario.net.cancel_count},
                    {"types", types}};
  if (scenario.has_sweep)
    doc["sweep"] = {{"variable", scenario.sweep.variable},
                    {"values", scenario.sweep.grid}};
  doc["simulation"] = {{"replications", scenario.sim.replications},
                       {"seed", scenario.sim.seed},
                       {"window", scenario.sim.window}};
  json metrics = json::array();
  for (const auto& m : scenario.outputs.metrics) metrics.push_back(m.name);
  doc["outputs"] = {{"metrics", metrics}, {"csv", scenario.outputs.csv_path}};
  return doc.dump(2);
}

ScenarioFile preset_scenario(const std::string& name) {
  if (name == "table1") {
    ScenarioFile s = table1_base(true);
    add_metrics(s, {"success", "success_cancel:1", "success_cancel:2",
                    "success_cancel:3", "capacity", "capacity_cancel:1",
                    "capacity_cancel:2", "capacity_cancel:3", "throughput",
                    "throughput_cancel:1", "throughput_pc:0.5"});
    return s;
  }
  if (name == "table1-nofading") {
    ScenarioFile s = table1_base(false);
    add_metrics(s, {"success", "capacity"});
    return s;
  }
  if (name == "table1-simo4") {
    ScenarioFile s = table1_base(true);
    for (auto& type : s.net.types) type.rx_antennas = 4;
    add_metrics(s, {"success_simo:4", "capacity_simo:4"});
    return s;
  }
  if (name.rfind("table1-pc", 0) == 0) {
    double gamma = 0.5;
    if (auto pos = name.find('='); pos != std::string::npos)
      gamma = std::stod(name.substr(pos + 1));
    ScenarioFile s = table1_base(true);
    for (auto& type : s.net.types) type.pc_exponent = gamma;
    std::ostringstream g;
    g << gamma;
    s.outputs.metrics.push_back(parse_metric("success_pc:" + g.str()));
    s.outputs.metrics.push_back(parse_metric("capacity_pc:" + g.str()));
    s.outputs.metrics.push_back(parse_metric("throughput_pc:" + g.str()));
    return s;
  }
  throw ParseError("unknown preset '" + name +
                   "'; available: table1, table1-nofading, table1-simo4, "
                   "table1-pc[=gamma]");
}

std::vector<std::string> preset_names() {
  return {"table1", "table1-nofading", "table1-simo4", "table1-pc"};
}

}  // namespace hetsir::cli
