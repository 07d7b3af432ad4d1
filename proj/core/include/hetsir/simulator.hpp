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
#include <functional>
#include <limits>
#include <vector>

#include "hetsir/model.hpp"
#include "hetsir/rng.hpp"

namespace hetsir::mc {

/// Monte Carlo scenario: network, window, replication budget and the
/// transmit-side options applied to every draw.
struct SimScenario {
  NetworkConfig net;
  double window_radius = 0.0;  // meters; 0 selects the auto rule
  long replications = 10000;
  std::uint64_t seed = 1;
  double tail_tolerance = 1e-3;  // truncated-interference budget delta_tail

  int cancel_max = 0;        // carry SIR_{k,L} for L = 0..cancel_max per draw
  bool power_control = false;  // draw powers from the per-type gamma rule
  bool simo = false;           // per-type M_r receive beamforming on the signal

  int threads = 0;  // 0 = default_thread_count()

  void validate() const;
};

/// Monte Carlo estimate with its standard error.
struct Estimate {
  double mean = 0.0;
  double stderr_ = 0.0;
  long n = 0;
  std::uint64_t seed = 0;

  /// |mean - reference| in units of the standard error.
  double sigma_distance(double reference) const {
    return stderr_ > 0.0 ? std::abs(mean - reference) / stderr_
                         : std::numeric_limits<double>::infinity();
  }
};

/// Window radius from the closed-form tail rule: the expected out-of-window
/// interference is tail_tolerance times the in-window reference level, which
/// gives R = r0 * delta^{-1/(alpha-2)} with pi r0^2 = 1 / total intensity.
double auto_window_radius(const NetworkConfig& net, double tail_tolerance);

struct PointSample {
  double distance_sq;  // squared distance to the typical receiver
  double power;
  double gain;         // channel gain toward the typical receiver
};

struct Realization {
  std::vector<std::vector<PointSample>> per_type;
};

/// One marked-PPP draw on the disk of the scenario's window radius.
Realization sample_network(const SimScenario& scenario, CounterRng& rng);

/// One SIR draw for type k with the scenario options applied (cancellation
/// level = scenario.cancel_max). Returns +infinity when no interference term
/// survives.
double sir_sample(const SimScenario& scenario, int k, CounterRng& rng);

/// What a batched pass should accumulate.
struct BatchSpec {
  double theta = 1.0;
  bool want_success = true;
  bool want_capacity = false;
  double fractional_delta = 0.0;        // >0 adds E[SIR^delta]
  std::vector<double> laplace_s;        // adds E[e^{-s I_L}] per entry
  std::vector<double> cdf_thetas;       // adds per-threshold CDF estimates
};

/// Estimates for every (type, cancellation level) pair from a single pass.
struct BatchResult {
  // Indexed [k][L] with L = 0..cancel_max.
  std::vector<std::vector<Estimate>> success;
  std::vector<std::vector<Estimate>> capacity;
  std::vector<std::vector<Estimate>> fractional_moment;
  // Indexed [s_index][L].
  std::vector<std::vector<Estimate>> laplace;
  // Indexed [k][theta_index] at L = cancel_max.
  std::vector<std::vector<Estimate>> cdf;
  long infinite_sir_draws = 0;  // sentinel count across the whole pass
};

/// Runs the scenario once and fills every requested estimator. Replications
/// are chunked deterministically: identical (scenario, seed) produce
/// bit-identical estimates for any thread count.
BatchResult run_batch(const SimScenario& scenario, const BatchSpec& spec);

Estimate estimate_success(const SimScenario& scenario, int k, double theta);
Estimate estimate_capacity(const SimScenario& scenario, int k);
Estimate estimate_fractional_moment(const SimScenario& scenario, int k,
                                    double delta);
Estimate estimate_laplace_interference(const SimScenario& scenario, double s);
std::vector<Estimate> estimate_cdf_grid(const SimScenario& scenario, int k,
                                        const std::vector<double>& thetas);

/// Monte Carlo spatial throughput sum_k lambda_k p_k c_k; the standard error
/// combines the per-type (success, capacity) covariances by the delta method.
Estimate estimate_throughput(const SimScenario& scenario, double theta);

/// Kolmogorov-Smirnov statistic of the biased nearest-distance law: squared
/// biased distances against Exponential(pi * lambda_prime).
double biased_nearest_distance_ks(const SimScenario& scenario, long samples,
                                  double lambda_prime);

/// KS statistic of simulated SIR draws against an arbitrary CDF callable.
double sir_ks_statistic(const SimScenario& scenario, int k, long samples,
                        const std::function<double(double)>& cdf);

}  // namespace hetsir::mc
