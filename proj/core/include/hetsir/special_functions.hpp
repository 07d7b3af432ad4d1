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

namespace hetsir::num {

/// Gamma function for a > 0.
double gamma_fn(double a);

/// log Gamma for a > 0 (thread safe).
double log_gamma(double a);

/// Reciprocal gamma 1/Gamma(a) for any real a; 0 at the poles a = 0, -1, ...
double reciprocal_gamma(double a);

/// Upper incomplete gamma Gamma(a, y) for y > 0 and any real a that is not a
/// non-positive integer. Negative a is reached with the downward recurrence
/// Gamma(a, y) = (Gamma(a+1, y) - y^a e^{-y}) / a from the principal branch.
double upper_incomplete_gamma(double a, double y);

/// Regularized lower incomplete gamma P(a, y) for a > 0, y >= 0.
double regularized_gamma_p(double a, double y);

/// (erf(x), erfc(x)); the pair always sums to 1 within rounding.
std::pair<double, double> erf_erfc(double x);

/// Scaled complementary error function e^{x^2} erfc(x) for x >= 0.
double erfcx(double x);

/// ell_z(y, x) = z [1 - x y^x Gamma(-x, y)] for z >= 0, y > 0, x in (0, 1).
///
/// Evaluated through the cancellation-free identity
///   1 - x y^x Gamma(-x, y) = (1 - e^{-y}) + y^x Gamma(1-x, y),
/// every term of which is nonnegative; the value lies in [0, z].
double ell(double z, double y, double x);

/// ell with a complex second argument (Re y > 0), used when the residual
/// interference transform is evaluated on a Bromwich contour.
std::complex<double> ell(double z, std::complex<double> y, double x);

/// Gamma(a, z) for a in (0, 1) and complex z with Re z >= 0.
std::complex<double> upper_incomplete_gamma(double a, std::complex<double> z);

}  // namespace hetsir::num
