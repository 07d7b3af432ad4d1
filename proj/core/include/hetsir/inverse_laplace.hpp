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

namespace hetsir::num {

using LaplaceTransform = std::function<std::complex<double>(std::complex<double>)>;

enum class InverseLaplaceMethod { kTalbotContour, kEulerBromwich };

struct InverseLaplaceSettings {
  InverseLaplaceMethod method = InverseLaplaceMethod::kTalbotContour;
  int node_count = 32;           // >= 8 and even
  double precision_guard = 1e-6;

  void validate() const;
};

/// f(t) from F(s) by the fixed-contour Talbot rule with M nodes.
/// The contour dips into Re s < 0, so F's analytic continuation there must
/// stay tame (true for exp(-c s^x)/s-type transforms).
double talbot_inversion(const LaplaceTransform& F, double t, int node_count);

/// f(t) by the Euler-accelerated Bromwich series. All evaluation points have
/// Re s > 0, which makes this the safe choice for transforms whose left-plane
/// continuation blows up.
double euler_inversion(const LaplaceTransform& F, double t, int node_count);

/// Numerical inverse Laplace transform at t > 0.
///
/// Runs the configured method and cross-checks against the other one (nodes
/// doubled once on disagreement); raises AccuracyError when the two methods
/// cannot be brought within precision_guard of each other.
double inverse_laplace(const LaplaceTransform& F, double t,
                       const InverseLaplaceSettings& settings = {});

/// Euler inversion with a node-doubling consistency check instead of a
/// second method; for transforms only safely evaluable at Re s > 0.
double inverse_laplace_right_plane(const LaplaceTransform& F, double t,
                                   int node_count = 32,
                                   double precision_guard = 1e-6);

}  // namespace hetsir::num
