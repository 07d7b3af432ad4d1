// SPDX-License-Identifier: Apache-2.0
//
// hetsir - SIR statistics for heterogeneous Poisson wireless networks
// Copyright (C) 2026 the hetsir authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at http://www.apache.org/licenses/LICENSE-2.0

#include "hetsir/rng.hpp"

#include <cmath>

#include "hetsir/errors.hpp"

namespace hetsir {

namespace {

constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ULL;

// SplitMix64 output function (Steele, Lea, Flood 2014).
inline std::uint64_t mix64(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

}  // namespace

CounterRng::CounterRng(std::uint64_t seed, std::uint64_t stream) {
  // Decorrelate the two keys before folding them into one counter base.
  state_ = mix64(seed + kGolden) ^ mix64(stream * 0xD1B54A32D192ED03ULL + kGolden);
}

std::uint64_t CounterRng::next_u64() {
  state_ += kGolden;
  return mix64(state_);
}

double CounterRng::next_double() {
  return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

double CounterRng::next_double_open() {
  return (static_cast<double>(next_u64() >> 11) + 1.0) * 0x1.0p-53;
}

double CounterRng::next_exponential() { return -std::log(next_double_open()); }

double CounterRng::next_normal() {
  if (has_cached_normal_) {
    has_cached_normal_ = false;
    return cached_normal_;
  }
  // Box-Muller; both variates kept.
  double u1 = next_double_open();
  double u2 = next_double();
  double r = std::sqrt(-2.0 * std::log(u1));
  double a = 6.283185307179586476925287 * u2;
  cached_normal_ = r * std::sin(a);
  has_cached_normal_ = true;
  return r * std::cos(a);
}

double CounterRng::next_gamma(double shape) {
  if (!(shape > 0.0)) throw DomainError("gamma sample requires shape > 0");
  if (shape < 1.0) {
    // Boost a shape+1 draw back down (Marsaglia-Tsang trick).
    double u = next_double_open();
    return next_gamma(shape + 1.0) * std::pow(u, 1.0 / shape);
  }
  // Marsaglia-Tsang squeeze method.
  const double d = shape - 1.0 / 3.0;
  const double c = 1.0 / std::sqrt(9.0 * d);
  for (;;) {
    double x, v;
    do {
      x = next_normal();
      v = 1.0 + c * x;
    } while (v <= 0.0);
    v = v * v * v;
    double u = next_double_open();
    if (u < 1.0 - 0.0331 * x * x * x * x) return d * v;
    if (std::log(u) < 0.5 * x * x + d * (1.0 - v + std::log(v))) return d * v;
  }
}

long CounterRng::next_poisson(double mean) {
  if (!(mean >= 0.0)) throw DomainError("poisson sample requires mean >= 0");
  // Knuth's product method, chunked so exp(-chunk) never underflows.
  // The sum of independent Poisson chunks is Poisson with the summed mean.
  long total = 0;
  double remaining = mean;
  while (remaining > 0.0) {
    double m = remaining > 16.0 ? 16.0 : remaining;
    remaining -= m;
    const double limit = std::exp(-m);
    double prod = next_double_open();
    while (prod > limit) {
      ++total;
      prod *= next_double_open();
    }
  }
  return total;
}

}  // namespace hetsir
