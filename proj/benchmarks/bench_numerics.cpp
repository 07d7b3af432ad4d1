// SPDX-License-Identifier: Apache-2.0
//
// hetsir - SIR statistics for heterogeneous Poisson wireless networks
// Copyright (C) 2026 the hetsir authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at http://www.apache.org/licenses/LICENSE-2.0

#include <benchmark/benchmark.h>

#include <cmath>
#include <complex>

#include "hetsir/exppoly.hpp"
#include "hetsir/inverse_laplace.hpp"
#include "hetsir/quadrature.hpp"
#include "hetsir/special_functions.hpp"

namespace {

using namespace hetsir::num;

void BM_UpperIncompleteGamma(benchmark::State& state) {
  double y = 0.1;
  for (auto _ : state) {
    benchmark::DoNotOptimize(upper_incomplete_gamma(-0.5, y));
    y = y < 20.0 ? y * 1.1 : 0.1;
  }
}
BENCHMARK(BM_UpperIncompleteGamma);

void BM_Ell(benchmark::State& state) {
  double y = 0.05;
  for (auto _ : state) {
    benchmark::DoNotOptimize(ell(3.0, y, 0.5));
    y = y < 50.0 ? y * 1.07 : 0.05;
  }
}
BENCHMARK(BM_Ell);

void BM_EllComplex(benchmark::State& state) {
  std::complex<double> y(4.0, 9.0);
  for (auto _ : state) benchmark::DoNotOptimize(ell(3.0, y, 0.5));
}
BENCHMARK(BM_EllComplex);

void BM_TalbotInversion(benchmark::State& state) {
  auto F = [](std::complex<double> s) {
    return std::exp(-0.3 * std::pow(s, 0.5)) / s;
  };
  for (auto _ : state) benchmark::DoNotOptimize(talbot_inversion(F, 1.0, 32));
}
BENCHMARK(BM_TalbotInversion);

void BM_EulerInversion(benchmark::State& state) {
  auto F = [](std::complex<double> s) {
    return std::exp(-0.3 * std::pow(s, 0.5)) / s;
  };
  for (auto _ : state) benchmark::DoNotOptimize(euler_inversion(F, 1.0, 32));
}
BENCHMARK(BM_EulerInversion);

void BM_GaussLaguerreBuild(benchmark::State& state) {
  double alpha = 0.0;
  for (auto _ : state) {
    // vary alpha so the cache never hits
    alpha += 0.001;
    benchmark::DoNotOptimize(gauss_laguerre(64, alpha));
  }
}
BENCHMARK(BM_GaussLaguerreBuild);

void BM_SemiInfiniteIntegral(benchmark::State& state) {
  QuadratureSettings qs;
  for (auto _ : state) {
    benchmark::DoNotOptimize(semi_infinite_integral(
        [](double t) { return -std::expm1(-t) / t * std::exp(-std::sqrt(t)); },
        qs));
  }
}
BENCHMARK(BM_SemiInfiniteIntegral);

void BM_ExpPolyDerivative(benchmark::State& state) {
  ExpPolySum expr{{1.0, 15.0, 2.0, -0.5}};
  for (auto _ : state)
    benchmark::DoNotOptimize(exppoly_derivative(expr, state.range(0)));
}
BENCHMARK(BM_ExpPolyDerivative)->Arg(4)->Arg(8)->Arg(16);

}  // namespace
