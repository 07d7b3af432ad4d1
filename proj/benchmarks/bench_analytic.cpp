// SPDX-License-Identifier: Apache-2.0
//
// hetsir - SIR statistics for heterogeneous Poisson wireless networks
// Copyright (C) 2026 the hetsir authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at http://www.apache.org/licenses/LICENSE-2.0

#include <benchmark/benchmark.h>

#include "hetsir/perf.hpp"
#include "hetsir/sirdist.hpp"

namespace {

using namespace hetsir;

NetworkConfig table1(double l1, bool rayleigh = true) {
  NetworkConfig net;
  auto fading = rayleigh ? DistributionSpec::exponential(1.0)
                         : DistributionSpec::constant(1.0);
  const double powers[3] = {1.0, 0.5, 0.05};
  const double ratios[3] = {1.0, 5.0, 10.0};
  for (int k = 0; k < 3; ++k) {
    TypeClassConfig type;
    type.intensity = ratios[k] * l1;
    type.power = DistributionSpec::constant(powers[k]);
    type.fading = fading;
    type.distance = DistributionSpec::constant(10.0);
    net.types.push_back(type);
  }
  net.alpha = 4.0;
  net.theta = 1.0;
  return net;
}

void BM_SirCdfClosedForm(benchmark::State& state) {
  auto net = table1(1e-4);
  for (auto _ : state) benchmark::DoNotOptimize(sir::sir_cdf(net, 0, 1.0));
}
BENCHMARK(BM_SirCdfClosedForm);

void BM_SirCdfErfAverage(benchmark::State& state) {
  auto net = table1(1e-4);
  net.types[0].fading = DistributionSpec::gamma(1.7, 1.0);
  for (auto _ : state) benchmark::DoNotOptimize(sir::sir_cdf(net, 0, 1.0));
}
BENCHMARK(BM_SirCdfErfAverage);

void BM_SirCdfInverseLaplace(benchmark::State& state) {
  auto net = table1(1e-4, false);
  net.alpha = 3.5;
  for (auto _ : state) benchmark::DoNotOptimize(sir::sir_cdf(net, 0, 1.0));
}
BENCHMARK(BM_SirCdfInverseLaplace);

void BM_ResidualTransform(benchmark::State& state) {
  auto net = table1(1e-4);
  sir::CancellationSpec cancel;
  cancel.L = static_cast<int>(state.range(0));
  for (auto _ : state)
    benchmark::DoNotOptimize(sir::laplace_residual_interference(net, cancel, 1e4));
}
BENCHMARK(BM_ResidualTransform)->Arg(1)->Arg(3);

void BM_SuccessCancelClosedForm(benchmark::State& state) {
  auto net = table1(1e-4);
  sir::CancellationSpec cancel;
  cancel.L = 2;
  for (auto _ : state)
    benchmark::DoNotOptimize(perf::success_prob_cancel(net, cancel, 2, 1.0));
}
BENCHMARK(BM_SuccessCancelClosedForm);

void BM_ErgodicCapacity(benchmark::State& state) {
  auto net = table1(1e-4);
  for (auto _ : state) benchmark::DoNotOptimize(perf::ergodic_capacity(net, 0));
}
BENCHMARK(BM_ErgodicCapacity);

void BM_ErgodicCapacityCancel(benchmark::State& state) {
  auto net = table1(1e-4);
  sir::CancellationSpec cancel;
  cancel.L = 2;
  for (auto _ : state)
    benchmark::DoNotOptimize(perf::ergodic_capacity_cancel(net, cancel, 0));
}
BENCHMARK(BM_ErgodicCapacityCancel);

void BM_ThroughputPoint(benchmark::State& state) {
  auto net = table1(1e-4);
  for (auto _ : state)
    benchmark::DoNotOptimize(perf::throughput_capacity(net).total);
}
BENCHMARK(BM_ThroughputPoint);

void BM_SuccessProbSimo(benchmark::State& state) {
  auto net = table1(1e-4);
  for (auto _ : state)
    benchmark::DoNotOptimize(perf::success_prob_simo(net, 0, 4, 1.0));
}
BENCHMARK(BM_SuccessProbSimo);

}  // namespace
