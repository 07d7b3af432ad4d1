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

namespace hetsir {

/// Counter-based splittable random stream keyed by (seed, stream).
///
/// Every (seed, stream) pair yields an independent deterministic sequence, so
/// Monte Carlo replications can draw from stream = replication index and be
/// merged in index order regardless of which worker thread ran them.
class CounterRng {
 public:
  CounterRng(std::uint64_t seed, std::uint64_t stream);

  std::uint64_t next_u64();

  /// Uniform in [0, 1) with 53 random bits.
  double next_double();

  /// Uniform in (0, 1]; safe as a log() argument.
  double next_double_open();

  double next_exponential();  // unit mean
  double next_normal();       // standard normal
  double next_gamma(double shape);  // unit scale, shape > 0
  long next_poisson(double mean);

 private:
  std::uint64_t state_;
  double cached_normal_ = 0.0;
  bool has_cached_normal_ = false;
};

}  // namespace hetsir
