// SPDX-License-Identifier: Apache-2.0
//
// hetsir - SIR statistics for heterogeneous Poisson wireless networks
// Copyright (C) 2026 the hetsir authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at http://www.apache.org/licenses/LICENSE-2.0

#include "hetsir/special_functions.hpp"

#include <cmath>
#include <limits>

#include "hetsir/errors.hpp"

namespace hetsir::num {

namespace {

constexpr int kMaxIterations = 512;
constexpr double kEps = std::numeric_limits<double>::epsilon();
constexpr double kTiny = 1e-300;

// Regularized lower incomplete gamma by its power series; for y < a + 1.
double gamma_p_series(double a, double y) {
  double term = 1.0 / a;
  double sum = term;
  double ap = a;
  for (int n = 0; n < kMaxIterations; ++n) {
    ap += 1.0;
    term *= y / ap;
    sum += term;
    if (std::fabs(term) < std::fabs(sum) * kEps) break;
  }
  // P(a,y) = y^a e^{-y} / Gamma(a) * sum
  return sum * std::exp(a * std::log(y) - y - log_gamma(a));
}

// Regularized upper incomplete gamma by Lentz's continued fraction; y >= a + 1.
double gamma_q_contfrac(double a, double y) {
  double b = y + 1.0 - a;
  double c = 1.0 / kTiny;
  double d = 1.0 / b;
  double h = d;
  for (int i = 1; i <= kMaxIterations; ++i) {
    double an = -static_cast<double>(i) * (static_cast<double>(i) - a);
    b += 2.0;
    d = an * d + b;
    if (std::fabs(d) < kTiny) d = kTiny;
    c = b + an / c;
    if (std::fabs(c) < kTiny) c = kTiny;
    d = 1.0 / d;
    double delta = d * c;
    h *= delta;
    if (std::fabs(delta - 1.0) < kEps) break;
  }
  // Q(a,y) = y^a e^{-y} / Gamma(a) * h
  return h * std::exp(a * std::log(y) - y - log_gamma(a));
}

// Gamma(a, y) for a > 0, y > 0 (unregularized).
double upper_gamma_positive(double a, double y) {
  if (y < a + 1.0) {
    double p = gamma_p_series(a, y);
    return (1.0 - p) * gamma_fn(a);
  }
  return gamma_q_contfrac(a, y) * gamma_fn(a);
}

}  // namespace

double gamma_fn(double a) {
  if (!(a > 0.0)) throw DomainError("gamma_fn requires a > 0");
  return std::tgamma(a);
}

double log_gamma(double a) {
  if (!(a > 0.0)) throw DomainError("log_gamma requires a > 0");
  int sign = 0;
  return ::lgamma_r(a, &sign);
}

double reciprocal_gamma(double a) {
  if (a > 0.0) return 1.0 / std::tgamma(a);
  double r = std::round(a);
  if (std::fabs(a - r) < 1e-12 && r <= 0.0) return 0.0;  // pole of Gamma
  return 1.0 / std::tgamma(a);
}

double upper_incomplete_gamma(double a, double y) {
  if (!(y > 0.0)) throw DomainError("upper_incomplete_gamma requires y > 0");
  if (a > 0.0) return upper_gamma_positive(a, y);
  double r = std::round(a);
  if (std::fabs(a - r) < 1e-14 && r <= 0.0)
    throw DomainError("upper_incomplete_gamma: non-positive integer order");
  // Recurse upward until the order is positive, then unwind:
  //   Gamma(a, y) = (Gamma(a+1, y) - y^a e^{-y}) / a
  int steps = static_cast<int>(std::ceil(-a));
  double a_top = a + steps;
  double g = upper_gamma_positive(a_top, y);
  for (int i = steps - 1; i >= 0; --i) {
    double ai = a + i;
    g = (g - std::pow(y, ai) * std::exp(-y)) / ai;
  }
  return g;
}

double regularized_gamma_p(double a, double y) {
  if (!(a > 0.0)) throw DomainError("regularized_gamma_p requires a > 0");
  if (y < 0.0) throw DomainError("regularized_gamma_p requires y >= 0");
  if (y == 0.0) return 0.0;
  if (y < a + 1.0) return gamma_p_series(a, y);
  return 1.0 - gamma_q_contfrac(a, y);
}

std::pair<double, double> erf_erfc(double x) {
  return {std::erf(x), std::erfc(x)};
}

double erfcx(double x) {
  if (x < 0.0) throw DomainError("erfcx requires x >= 0");
  if (x < 12.0) return std::exp(x * x) * std::erfc(x);
  // Asymptotic erfcx(x) ~ 1/(x sqrt(pi)) * sum (-1)^n (2n-1)!! / (2x^2)^n
  const double inv2x2 = 1.0 / (2.0 * x * x);
  double term = 1.0;
  double sum = 1.0;
  for (int n = 1; n <= 12; ++n) {
    term *= -(2.0 * n - 1.0) * inv2x2;
    sum += term;
    if (std::fabs(term) < kEps) break;
  }
  return sum / (x * 1.772453850905516027298167);
}

double ell(double z, double y, double x) {
  if (!(z >= 0.0)) throw DomainError("ell requires z >= 0");
  if (!(y > 0.0)) throw DomainError("ell requires y > 0");
  if (!(x > 0.0 && x < 1.0)) throw DomainError("ell requires x in (0,1)");
  if (z == 0.0) return 0.0;
  double tail = y > 700.0 ? 0.0 : std::pow(y, x) * upper_gamma_positive(1.0 - x, y);
  return z * (-std::expm1(-y) + tail);
}

std::complex<double> ell(double z, std::complex<double> y, double x) {
  if (z == 0.0) return {0.0, 0.0};
  std::complex<double> one_minus_exp = 1.0 - std::exp(-y);
  std::complex<double> tail =
      std::pow(y, x) * upper_incomplete_gamma(1.0 - x, y);
  return z * (one_minus_exp + tail);
}

std::complex<double> upper_incomplete_gamma(double a, std::complex<double> z) {
  if (!(a > 0.0 && a < 1.0))
    throw DomainError("complex upper_incomplete_gamma supports a in (0,1)");
  if (std::abs(z) < 1e-280) return {gamma_fn(a), 0.0};

  // The Kummer series carries cancellation of order e^{|z| - Re z}, so it is
  // only safe for small |z|; elsewhere Lentz's continued fraction converges
  // for Re z >= 0 (more iterations near the imaginary axis).
  if (std::abs(z) < 12.0) {
    // gamma(a, z) = z^a e^{-z} sum_n z^n / (a (a+1) ... (a+n))
    std::complex<double> term = 1.0 / a;
    std::complex<double> sum = term;
    for (int n = 1; n <= kMaxIterations; ++n) {
      term *= z / (a + static_cast<double>(n));
      sum += term;
      if (std::abs(term) < std::abs(sum) * kEps) break;
    }
    std::complex<double> lower = std::pow(z, a) * std::exp(-z) * sum;
    return gamma_fn(a) - lower;
  }

  std::complex<double> b = z + 1.0 - a;
  std::complex<double> c = 1.0 / kTiny;
  std::complex<double> d = 1.0 / b;
  std::complex<double> h = d;
  for (int i = 1; i <= 4000; ++i) {
    double an = -static_cast<double>(i) * (static_cast<double>(i) - a);
    b += 2.0;
    d = an * d + b;
    if (std::abs(d) < kTiny) d = kTiny;
    c = b + an / c;
    if (std::abs(c) < kTiny) c = kTiny;
    d = 1.0 / d;
    std::complex<double> delta = d * c;
    h *= delta;
    if (std::abs(delta - 1.0) < kEps) break;
  }
  return std::exp(-z + a * std::log(z)) * h;
}

}  // namespace hetsir::num
