// SPDX-License-Identifier: Apache-2.0
//
// hetsir - SIR statistics for heterogeneous Poisson wireless networks
// Copyright (C) 2026 the hetsir authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at http://www.apache.org/licenses/LICENSE-2.0

#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hetsir/model.hpp"
#include "hetsir/sirdist.hpp"

namespace hetsir::perf {

/// Stochastic power control P = P_mean (H R^{-alpha})^gamma / normalization.
/// gamma = 0 reproduces constant power exactly.
struct PowerControlSpec {
  std::vector<double> gamma;       // per type, >= -1
  std::vector<double> mean_power;  // watts, > 0

  static PowerControlSpec from_network(const NetworkConfig& net);
  static PowerControlSpec uniform(const NetworkConfig& net, double gamma);
  void validate(int K) const;
  bool all_zero() const;
};

/// E[ln(1 + rho Z)] through the Laplace-transform integral identity.
double shannon_transform(const DistributionSpec& z, double rho);

/// E[ln(1 + rho Z)] for random rho independent of Z.
double shannon_transform(const DistributionSpec& z, const DistributionSpec& rho);

/// P[SIR_k > theta].
double success_prob(const NetworkConfig& net, int k, double theta);

/// (lower, upper) envelope on the success probability.
std::pair<double, double> success_prob_bounds(const NetworkConfig& net, int k,
                                              double theta);

/// Success probability with the L strongest interferers removed.
double success_prob_cancel(const NetworkConfig& net,
                           const sir::CancellationSpec& cancel, int k,
                           double theta);

/// Truncated-MGF upper bound on the cancellation success probability; only a
/// genuine bound for small enough omega (see CancellationSpec).
double success_prob_cancel_upper(const NetworkConfig& net,
                                 const sir::CancellationSpec& cancel, int k,
                                 double theta, bool* sensitive = nullptr);

/// Interval of normalized intensities Lambda = pi lambda_tilde / E[S]^{2/a}
/// where signal randomness (unit-mean Gamma with shape m) lowers the success
/// probability compared to a constant signal.
struct FadingRegion {
  double lower = 0.0;
  double upper = 0.0;
  bool empty = false;
  bool contains(double lambda_norm) const {
    return !empty && lambda_norm > lower && lambda_norm < upper;
  }
};

FadingRegion fading_region(double theta, int m, double alpha);

struct PcSuccessResult {
  double value = 0.0;   // exact at alpha = 4, midpoint of the bounds otherwise
  double lower = 0.0;
  double upper = 1.0;
  bool exact = false;
  // Numerical check of the CCDF hypothesis E[Fc(Z)] <= Fc(E[Z]) behind the
  // upper bound; when false the upper bound is reported but untrusted.
  bool ccdf_hypothesis_ok = true;
};

PcSuccessResult success_prob_pc(const NetworkConfig& net,
                                const PowerControlSpec& pc, int k, double theta);

struct PcBenefit {
  bool benefits = false;
  double margin = 0.0;
};

/// Does stochastic power control beat constant power at this threshold?
PcBenefit pc_benefit_check(const NetworkConfig& net, const PowerControlSpec& pc,
                           int k, double theta);

/// Success probability of a 1 x M_r SIMO link with receive beamforming
/// (alpha = 4, constant transmit power/distance for type k).
double success_prob_simo(const NetworkConfig& net, int k, int rx_antennas,
                         double theta);

/// E[log2(1 + SIR_k)] in bps/Hz.
double ergodic_capacity(const NetworkConfig& net, int k);

/// Same quantity through the success-probability route
/// (1/ln2) int p_k(t)/(1+t) dt; an independent derivation kept as a
/// cross-check of ergodic_capacity.
double ergodic_capacity_via_success(const NetworkConfig& net, int k);

double ergodic_capacity_cancel(const NetworkConfig& net,
                               const sir::CancellationSpec& cancel, int k);

double ergodic_capacity_cancel_upper(const NetworkConfig& net,
                                     const sir::CancellationSpec& cancel, int k,
                                     bool* sensitive = nullptr);

struct PcCapacityResult {
  double value = 0.0;
  double lower = 0.0;
  double upper = 0.0;
  bool benefit_interference_cond = false;  // effective-intensity condition
  bool benefit_signal_cond = false;        // signal-transform condition
  std::string note;
};

PcCapacityResult ergodic_capacity_pc(const NetworkConfig& net,
                                     const PowerControlSpec& pc, int k);

/// Ergodic capacity of a 1 x M_r SIMO link (constant power/distance).
double ergodic_capacity_simo(const NetworkConfig& net, int k, int rx_antennas);

struct ThroughputOptions {
  std::optional<sir::CancellationSpec> cancel;
  std::optional<PowerControlSpec> pc;
};

struct ThroughputResult {
  struct PerType {
    double success = 0.0;
    double capacity = 0.0;
    double contribution = 0.0;  // lambda_k * p_k * c_k
  };
  double total = 0.0;  // bps/Hz/m^2
  std::vector<PerType> per_type;

  // Filled by optimize_throughput.
  std::vector<double> optimal_lambda;
  int optimizer_evaluations = 0;
  // Closed-form reference values (reported, never asserted): the printed
  // formula for the optimal intensity contains the integration variable, so
  // the numeric optimizer is authoritative.
  double reference_cstar = 0.0;
  double reference_lambda1_star = 0.0;
  bool reference_available = false;
};

/// C(theta) = sum_k c_k lambda_k p_k(theta) with the matching success /
/// capacity variants when cancellation or power control options are set.
ThroughputResult throughput_capacity(const NetworkConfig& net,
                                     const ThroughputOptions& options = {});

/// Maximizes throughput over the common intensity scale with the per-type
/// ratios fixed to those of `net`. Gradient-free: coarse log grid then
/// golden-section refinement to 1e-4 relative.
ThroughputResult optimize_throughput(const NetworkConfig& net, double theta,
                                     const ThroughputOptions& options = {});

/// xi(alpha, theta) = int dt / ((t^{2/a} + theta^{2/a}) (1 + t)).
double xi_integral(double alpha, double theta);

}  // namespace hetsir::perf
