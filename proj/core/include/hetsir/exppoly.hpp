// SPDX-License-Identifier: Apache-2.0
//
// hetsir - SIR statistics for heterogeneous Poisson wireless networks
// Copyright (C) 2026 the hetsir authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at http://www.apache.org/licenses/LICENSE-2.0

#pragma once

#include <vector>

namespace hetsir::num {

/// One term c * v^p * exp(-a * v^q).
///
/// The family is closed under d/dv:
///   d/dv [c v^p e^{-a v^q}] = c p v^{p-1} e^{-a v^q} - c a q v^{p+q-1} e^{-a v^q}
/// which is what makes the Erlang-order closed forms and the SIMO derivative
/// exactly representable.
struct ExpPolyTerm {
  double coefficient = 0.0;
  double power_of_v = 0.0;
  double decay_scale = 0.0;     // a
  double decay_exponent = 1.0;  // q
};

using ExpPolySum = std::vector<ExpPolyTerm>;

/// Exact order-th derivative of the sum; order in [0, 16].
ExpPolySum exppoly_derivative(const ExpPolySum& expr, int order);

/// Evaluates the sum at v > 0.
double exppoly_eval(const ExpPolySum& expr, double v);

}  // namespace hetsir::num
