// SPDX-License-Identifier: Apache-2.0
//
// hetsir - SIR statistics for heterogeneous Poisson wireless networks
// Copyright (C) 2026 the hetsir authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at http://www.apache.org/licenses/LICENSE-2.0

#pragma once

#include <functional>
#include <vector>

namespace hetsir::num {

enum class TailCutoffPolicy { kFixedUpperLimit, kAdaptiveDecayDetection };

struct QuadratureSettings {
  double rel_tol = 1e-8;
  double abs_tol = 1e-12;
  int max_subdivisions = 400;
  TailCutoffPolicy tail_cutoff_policy = TailCutoffPolicy::kAdaptiveDecayDetection;
  // Initial upper limit; fixed_upper_limit integrates (0, upper_limit] only,
  // adaptive mode keeps doubling it until the tail contributes < abs_tol.
  double upper_limit = 64.0;

  void validate() const;
};

/// Adaptive Gauss-Kronrod (G7,K15) integration over a finite interval.
double integrate(const std::function<double(double)>& f, double a, double b,
                 const QuadratureSettings& settings = {});

/// Integral of f over (0, infinity) for integrands with decaying tails.
/// Integrable endpoint behavior at 0 is fine; the rule is open.
double semi_infinite_integral(const std::function<double(double)>& f,
                              const QuadratureSettings& settings = {});

struct GaussRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

/// Generalized Gauss-Laguerre rule: integrates x^alpha e^{-x} g(x) exactly
/// for polynomial g up to degree 2n-1. Weights sum to Gamma(alpha + 1).
/// Results are cached per (n, alpha); alpha > -1.
const GaussRule& gauss_laguerre(int n, double alpha);

}  // namespace hetsir::num
