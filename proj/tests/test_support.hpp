// SPDX-License-Identifier: Apache-2.0
//
// hetsir - SIR statistics for heterogeneous Poisson wireless networks
// Copyright (C) 2026 the hetsir authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at http://www.apache.org/licenses/LICENSE-2.0

#pragma once

#include <random>

#include "hetsir/model.hpp"

namespace hetsir_test {

/// Three-type benchmark network: powers 1/0.5/0.05 W,
/// intensities lambda1/5 lambda1/10 lambda1, 10 m links, alpha = 4.
inline hetsir::NetworkConfig table1(double lambda1, bool rayleigh = true) {
  using hetsir::DistributionSpec;
  hetsir::NetworkConfig net;
  auto fading = rayleigh ? DistributionSpec::exponential(1.0)
                         : DistributionSpec::constant(1.0);
  const double powers[3] = {1.0, 0.5, 0.05};
  const double ratios[3] = {1.0, 5.0, 10.0};
  for (int k = 0; k < 3; ++k) {
    hetsir::TypeClassConfig type;
    type.intensity = ratios[k] * lambda1;
    type.power = DistributionSpec::constant(powers[k]);
    type.fading = fading;
    type.distance = DistributionSpec::constant(10.0);
    net.types.push_back(type);
  }
  net.alpha = 4.0;
  net.theta = 1.0;
  return net;
}

inline hetsir::NetworkConfig single_type(double lambda, double alpha = 4.0,
                                         bool rayleigh = true,
                                         double power = 1.0,
                                         double distance = 10.0) {
  using hetsir::DistributionSpec;
  hetsir::NetworkConfig net;
  hetsir::TypeClassConfig type;
  type.intensity = lambda;
  type.power = DistributionSpec::constant(power);
  type.fading = rayleigh ? DistributionSpec::exponential(1.0)
                         : DistributionSpec::constant(1.0);
  type.distance = DistributionSpec::constant(distance);
  net.types.push_back(type);
  net.alpha = alpha;
  net.theta = 1.0;
  return net;
}

/// Random gamma-family or constant spec with mean in [0.2, 5].
inline hetsir::DistributionSpec random_spec(std::mt19937& gen,
                                            bool allow_constant = true) {
  using hetsir::DistributionSpec;
  std::uniform_real_distribution<double> uni(0.0, 1.0);
  std::uniform_real_distribution<double> mean_dist(0.2, 5.0);
  double mean = mean_dist(gen);
  double pick = uni(gen);
  if (allow_constant && pick < 0.25) return DistributionSpec::constant(mean);
  if (pick < 0.5) return DistributionSpec::exponential(mean);
  if (pick < 0.75) {
    std::uniform_real_distribution<double> shape(0.5, 6.0);
    return DistributionSpec::gamma(shape(gen), mean);
  }
  std::uniform_int_distribution<int> shape(1, 6);
  return DistributionSpec::erlang(shape(gen), mean);
}

/// Random small network with gamma-family marks; moments of order |q| <= 1
/// guaranteed finite (shapes >= 0.5, distances constant).
inline hetsir::NetworkConfig random_network(std::mt19937& gen,
                                            bool alpha_four = false) {
  using hetsir::DistributionSpec;
  std::uniform_int_distribution<int> k_dist(1, 3);
  std::uniform_real_distribution<double> alpha_dist(2.6, 6.0);
  std::uniform_real_distribution<double> log_lambda(-5.5, -3.0);
  std::uniform_real_distribution<double> power_dist(0.05, 2.0);
  std::uniform_real_distribution<double> dist_dist(2.0, 25.0);
  std::uniform_real_distribution<double> uni(0.0, 1.0);

  hetsir::NetworkConfig net;
  net.alpha = alpha_four ? 4.0 : alpha_dist(gen);
  net.theta = 1.0;
  int K = k_dist(gen);
  for (int k = 0; k < K; ++k) {
    hetsir::TypeClassConfig type;
    type.intensity = std::pow(10.0, log_lambda(gen));
    type.power = DistributionSpec::constant(power_dist(gen));
    double pick = uni(gen);
    if (pick < 0.4) {
      type.fading = DistributionSpec::exponential(1.0);
    } else if (pick < 0.7) {
      std::uniform_int_distribution<int> shape(1, 4);
      type.fading = DistributionSpec::erlang(shape(gen), 1.0);
    } else {
      type.fading = DistributionSpec::constant(1.0);
    }
    type.distance = DistributionSpec::constant(dist_dist(gen));
    net.types.push_back(type);
  }
  return net;
}

}  // namespace hetsir_test
