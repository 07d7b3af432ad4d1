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
#include <utility>
#include <vector>

#include "hetsir/model.hpp"

namespace hetsir::sir {

/// Removal of the L strongest interference terms at the receiver.
struct CancellationSpec {
  int L = 1;                        // number of strongest interferers removed
  double omega = 0.5;               // mean-value calibration for the MGF bound
  int erlang_quadrature_nodes = 64; // nodes for the D_L expectation
  double d_min_quantile = 0.01;     // lower truncation of the divergent MGF bound

  void validate() const;
};

enum class CdfMethod {
  kClosedForm,
  kInverseLaplace,
  kErfAlpha4,
  kTaylorApprox,
  kBoundLower,
  kBoundUpper,
};

struct SirCdfResult {
  double value = 0.0;
  CdfMethod method = CdfMethod::kClosedForm;
  struct Diagnostics {
    int ilt_nodes = 0;
    double agreement_gap = 0.0;
    bool truncation_sensitive = false;
  } diagnostics;
};

/// pi * Gamma(1 - 2/alpha) * lambda_tilde; the exponent coefficient of the
/// interference Laplace transform.
double interference_exponent(const NetworkConfig& net);

/// L_{I_k}(s) = exp(-pi Gamma(1-2/alpha) s^{2/alpha} lambda_tilde). The
/// interference seen by a typical receiver is type-independent.
double laplace_interference(const NetworkConfig& net, double s);

/// L_{I_{k,L}}(s): interference transform after removing the L strongest
/// terms; the Erlang expectation over D_L runs on a generalized
/// Gauss-Laguerre rule. Always >= laplace_interference(net, s).
double laplace_residual_interference(const NetworkConfig& net,
                                     const CancellationSpec& cancel, double s);

/// Compensation factor M_{ell_{D_L}(s)}(pi lambda_tilde); equals
/// laplace_residual / laplace_interference. Returns 1 for L = 0.
double residual_compensation(const NetworkConfig& net, int L, double s,
                             int nodes = 64);

/// Truncated-MGF upper bound on the residual transform. The literal
/// expectation diverges at D -> 0 for alpha >= 4, so the Erlang law is
/// truncated below its d_min_quantile; `sensitive` reports whether halving
/// the truncation point moves the value by more than 1%.
double laplace_residual_upper_bound(const NetworkConfig& net,
                                    const CancellationSpec& cancel, double s,
                                    bool* sensitive = nullptr);

/// CDF of the type-k SIR at threshold theta. Dispatch: Erlang signal ->
/// exact derivative closed form; constant signal at alpha=4 -> erf; random
/// signal at alpha=4 -> expectation of erf; otherwise numerical inverse
/// Laplace with the signal expectation outside the transform.
SirCdfResult sir_cdf(const NetworkConfig& net, int k, double theta);

/// CDF of the type-k SIR with the L strongest interferers removed.
SirCdfResult sir_cdf_cancel(const NetworkConfig& net,
                            const CancellationSpec& cancel, int k, double theta);

/// (lower, upper) envelope valid for any alpha > 2; closed forms at alpha=4.
std::pair<double, double> sir_cdf_bounds(const NetworkConfig& net, int k,
                                         double theta);

/// Small-lambda Taylor expansion of the CDF; `quality_ok` (optional) is set
/// false when pi lambda_tilde E[S^{-2/a}] theta^{2/a} > 0.1 and the caller
/// should not trust the expansion.
double sir_cdf_taylor(const NetworkConfig& net, int k, double theta,
                      bool* quality_ok = nullptr);

/// Closed-form lower bound on the cancellation CDF for alpha = 4, L >= 2
/// (the E[1/D_L] correction is infinite at L = 1; use the exact op there).
double sir_cdf_cancel_lower_bound_alpha4(const NetworkConfig& net,
                                         const CancellationSpec& cancel, int k,
                                         double theta);

/// E[SIR_k^delta] closed form.
double sir_fractional_moment(const NetworkConfig& net, int k, double delta);

/// E[SIR_{k,L}^delta] by outer quadrature over the moment integral with the
/// residual compensation factor inside.
double sir_fractional_moment_cancel(const NetworkConfig& net,
                                    const CancellationSpec& cancel, int k,
                                    double delta);

/// CDF over a theta grid; shared per-config quantities are computed once and
/// grid points run in parallel with order-fixed output.
std::vector<SirCdfResult> sir_cdf_grid(const NetworkConfig& net, int k,
                                       const std::vector<double>& thetas);

}  // namespace hetsir::sir
