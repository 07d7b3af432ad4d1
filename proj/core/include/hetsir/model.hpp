// SPDX-License-Identifier: Apache-2.0
//
// hetsir - SIR statistics for heterogeneous Poisson wireless networks
// Copyright (C) 2026 the hetsir authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at http://www.apache.org/licenses/LICENSE-2.0

#pragma once

#include <complex>
#include <functional>
#include <string>
#include <vector>

#include "hetsir/rng.hpp"

namespace hetsir {

enum class DistKind { kConstant, kExponential, kGamma, kErlang };

/// Nonnegative random-variable descriptor: constant, exponential, gamma or
/// Erlang. Carries exact closed forms for fractional moments, the Laplace
/// transform and the density, plus sampling for the simulator.
class DistributionSpec {
 public:
  static DistributionSpec constant(double value);
  static DistributionSpec exponential(double mean);
  static DistributionSpec gamma(double shape, double mean);
  static DistributionSpec erlang(int shape, double mean);

  DistKind kind() const { return kind_; }
  double mean() const { return mean_; }

  /// Gamma-family shape; 1 for exponential, infinity conceptually for
  /// constant (throws there).
  double shape() const;

  bool is_constant() const { return kind_ == DistKind::kConstant; }
  /// exponential / gamma / erlang, i.e. the density is a gamma density.
  bool gamma_family() const { return kind_ != DistKind::kConstant; }
  /// Gamma-family with integer shape (Erlang-distributed).
  bool integer_shape() const;

  /// E[X^p]; exact closed form. Throws DivergenceError when the moment does
  /// not exist (gamma family with p <= -shape).
  double fractional_moment(double p) const;

  double laplace(double s) const;
  std::complex<double> laplace(std::complex<double> s) const;

  /// Density at x > 0 (gamma family only).
  double density(double x) const;

  double sample(CounterRng& rng) const;

  /// Same distribution scaled by factor > 0 (X -> factor * X).
  DistributionSpec scaled(double factor) const;

  /// Nodes/weights for E[g(X)] with weights summing to 1; a single node for
  /// constants, a generalized Gauss-Laguerre rule otherwise.
  std::vector<std::pair<double, double>> expectation_nodes(int n) const;

  std::string describe() const;

  bool operator==(const DistributionSpec&) const = default;

 private:
  DistributionSpec(DistKind kind, double mean, double shape);

  DistKind kind_;
  double mean_;
  double shape_;  // gamma/erlang shape; 1 for exponential; unused for constant
};

/// One transmitter type: intensity plus the marks attached to each pair.
struct TypeClassConfig {
  double intensity = 0.0;                                        // TX per m^2
  DistributionSpec power = DistributionSpec::constant(1.0);      // P_k, watts
  DistributionSpec fading = DistributionSpec::exponential(1.0);  // H_k, unit mean
  DistributionSpec distance = DistributionSpec::constant(10.0);  // R_k, meters
  double pc_exponent = 0.0;  // gamma_k; 0 means no power control
  int rx_antennas = 1;       // M_r
};

/// K type classes + pathloss exponent + SIR decoding threshold.
struct NetworkConfig {
  std::vector<TypeClassConfig> types;
  double alpha = 4.0;
  double theta = 1.0;
  int cancel_count = 0;  // L

  int K() const { return static_cast<int>(types.size()); }

  /// Returns a checked copy with every fading spec rescaled to unit mean.
  /// Throws DomainError on violated invariants (alpha <= 2, theta <= 0,
  /// empty types, nonpositive intensity, distance support below 1 m).
  NetworkConfig validated() const;

  /// Cheap invariant check used at op entry.
  void check() const;
};

/// Effective intensities every formula consumes.
struct DerivedIntensities {
  std::vector<double> lambda_tilde_k;  // per-type effective intensity
  double lambda_tilde = 0.0;           // their sum
  double lambda_tilde_pc = 0.0;        // power-controlled effective intensity
  std::vector<double> Lambda_tilde_k;  // pi * lambda_tilde / E[S_k]^{2/alpha}
};

/// lambda_tilde_k = lambda_k E[H^{2/a}] E[P^{2/a}]; the pc variant applies
/// the two Jensen ratio factors of the stochastic power control mapping.
DerivedIntensities derive_intensities(const NetworkConfig& net);

/// Intensity of the single unmarked PPP whose biased nearest-point distance
/// squared is exponential: lambda' = sum_k lambda_k E[(P_k H_k)^{2/alpha}].
double mapped_intensity(const NetworkConfig& net);

/// E[S_k] = E[P] E[H] E[R^{-alpha}].
double mean_signal(const NetworkConfig& net, int k);

/// E[S_k^q] as the product of independent factor moments.
double signal_moment(const NetworkConfig& net, int k, double q);

/// How the received signal power S_k = P H R^{-alpha} is distributed.
struct SignalProfile {
  enum class Kind { kConstant, kGammaShape, kGeneral } kind;
  double shape = 0.0;  // for kGammaShape
  double mean = 0.0;   // E[S_k]
  bool integer_shape = false;
};

SignalProfile signal_profile(const NetworkConfig& net, int k);

/// E[g(S_k)] by iterated per-factor Gauss rules (exact for constants).
double expect_signal(const NetworkConfig& net, int k,
                     const std::function<double(double)>& g,
                     int nodes_per_factor = 64);

/// Laplace transform of the unit-mean signal: E[exp(-s S_k / E[S_k])].
double laplace_signal_hat(const NetworkConfig& net, int k, double s);

}  // namespace hetsir
