// SPDX-License-Identifier: Apache-2.0
//
// hetsir - SIR statistics for heterogeneous Poisson wireless networks
// Copyright (C) 2026 the hetsir authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at http://www.apache.org/licenses/LICENSE-2.0

#include <benchmark/benchmark.h>

#include "hetsir/simulator.hpp"

namespace {

using namespace hetsir;

mc::SimScenario table1_scenario(long replications) {
  mc::SimScenario scenario;
  auto fading = DistributionSpec::exponential(1.0);
  const double powers[3] = {1.0, 0.5, 0.05};
  const double ratios[3] = {1.0, 5.0, 10.0};
  for (int k = 0; k < 3; ++k) {
    TypeClassConfig type;
    type.intensity = ratios[k] * 1e-4;
    type.power = DistributionSpec::constant(powers[k]);
    type.fading = fading;
    type.distance = DistributionSpec::constant(10.0);
    scenario.net.types.push_back(type);
  }
  scenario.net.alpha = 4.0;
  scenario.net.theta = 1.0;
  scenario.replications = replications;
  scenario.seed = 7;
  scenario.threads = 1;
  return scenario;
}

void BM_SuccessEstimate(benchmark::State& state) {
  auto scenario = table1_scenario(state.range(0));
  for (auto _ : state)
    benchmark::DoNotOptimize(mc::estimate_success(scenario, 0, 1.0));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_SuccessEstimate)->Arg(1000)->Arg(4000)->Unit(benchmark::kMillisecond);

void BM_BatchWithCancellation(benchmark::State& state) {
  auto scenario = table1_scenario(1000);
  scenario.cancel_max = 3;
  mc::BatchSpec spec;
  spec.theta = 1.0;
  spec.want_capacity = true;
  for (auto _ : state) benchmark::DoNotOptimize(mc::run_batch(scenario, spec));
  state.SetItemsProcessed(state.iterations() * 1000);
}
BENCHMARK(BM_BatchWithCancellation)->Unit(benchmark::kMillisecond);

void BM_SampleNetwork(benchmark::State& state) {
  auto scenario = table1_scenario(1);
  std::uint64_t rep = 0;
  for (auto _ : state) {
    CounterRng rng(scenario.seed, rep++);
    benchmark::DoNotOptimize(mc::sample_network(scenario, rng));
  }
}
BENCHMARK(BM_SampleNetwork)->Unit(benchmark::kMicrosecond);

}  // namespace

BENCHMARK_MAIN();
