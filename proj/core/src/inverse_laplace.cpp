// SPDX-License-Identifier: Apache-2.0
//
// hetsir - SIR statistics for heterogeneous Poisson wireless networks
// Copyright (C) 2026 the hetsir authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at http://www.apache.org/licenses/LICENSE-2.0

#include "hetsir/inverse_laplace.hpp"

#include <cmath>
#include <vector>

#include "hetsir/errors.hpp"

namespace hetsir::num {

namespace {

constexpr double kPi = 3.141592653589793238462643;

double agreement_gap(double a, double b) {
  double scale = std::max({std::fabs(a), std::fabs(b), 1.0});
  return std::fabs(a - b) / scale;
}

}  // namespace

void InverseLaplaceSettings::validate() const {
  if (node_count < 8 || node_count % 2 != 0)
    throw DomainError("InverseLaplaceSettings: node_count must be >= 8 and even");
  if (!(precision_guard > 0.0))
    throw DomainError("InverseLaplaceSettings: precision_guard must be > 0");
}

double talbot_inversion(const LaplaceTransform& F, double t, int node_count) {
  if (!(t > 0.0)) throw DomainError("talbot_inversion requires t > 0");
  const int M = node_count;
  const double r = 2.0 * M / (5.0 * t);
  // theta = 0 node: s = r on the real axis.
  double sum = 0.5 * std::exp(r * t) * F(std::complex<double>(r, 0.0)).real();
  for (int k = 1; k < M; ++k) {
    const double theta = k * kPi / M;
    const double cot = std::cos(theta) / std::sin(theta);
    const std::complex<double> s(r * theta * cot, r * theta);
    const double sigma = theta + (theta * cot - 1.0) * cot;
    const std::complex<double> weight(1.0, sigma);
    sum += (std::exp(s * t) * F(s) * weight).real();
  }
  return sum * r / M;
}

double euler_inversion(const LaplaceTransform& F, double t, int node_count) {
  if (!(t > 0.0)) throw DomainError("euler_inversion requires t > 0");
  // Abate-Whitt Euler algorithm: alternating Bromwich series accelerated by
  // binomial averaging of the last m partial sums. A sets the discretization
  // error at roughly e^{-A}.
  const double A = 18.4;
  const int n_burn = node_count;
  const int m_avg = node_count / 2;
  const int total = n_burn + m_avg;

  const double prefactor = std::exp(A / 2.0) / t;
  std::vector<double> partial(total + 1);
  double running = 0.5 * prefactor * F(std::complex<double>(A / (2.0 * t), 0.0)).real();
  partial[0] = running;
  double sign = -1.0;
  for (int k = 1; k <= total; ++k) {
    const std::complex<double> s(A / (2.0 * t), k * kPi / t);
    running += sign * prefactor * F(s).real();
    partial[k] = running;
    sign = -sign;
  }

  // Binomial weights C(m, j) / 2^m applied to partial[n_burn + j].
  double result = 0.0;
  double coeff = std::ldexp(1.0, -m_avg);  // C(m,0)/2^m
  for (int j = 0; j <= m_avg; ++j) {
    result += coeff * partial[n_burn + j];
    coeff *= static_cast<double>(m_avg - j) / static_cast<double>(j + 1);
  }
  return result;
}

double inverse_laplace(const LaplaceTransform& F, double t,
                       const InverseLaplaceSettings& settings) {
  settings.validate();
  if (!(t > 0.0)) throw DomainError("inverse_laplace requires t > 0");

  const bool talbot_primary =
      settings.method == InverseLaplaceMethod::kTalbotContour;
  int nodes = settings.node_count;
  double primary = talbot_primary ? talbot_inversion(F, t, nodes)
                                  : euler_inversion(F, t, nodes);
  double check = talbot_primary ? euler_inversion(F, t, nodes)
                                : talbot_inversion(F, t, nodes);
  if (agreement_gap(primary, check) <= settings.precision_guard)
    return primary;

  nodes *= 2;
  primary = talbot_primary ? talbot_inversion(F, t, nodes)
                           : euler_inversion(F, t, nodes);
  check = talbot_primary ? euler_inversion(F, t, nodes)
                         : talbot_inversion(F, t, nodes);
  if (agreement_gap(primary, check) <= settings.precision_guard)
    return primary;
  throw AccuracyError("inverse_laplace: Talbot and Euler evaluations disagree");
}

double inverse_laplace_right_plane(const LaplaceTransform& F, double t,
                                   int node_count, double precision_guard) {
  if (!(t > 0.0)) throw DomainError("inverse_laplace requires t > 0");
  double coarse = euler_inversion(F, t, node_count);
  double fine = euler_inversion(F, t, 2 * node_count);
  if (agreement_gap(coarse, fine) <= precision_guard) return fine;
  double finer = euler_inversion(F, t, 4 * node_count);
  if (agreement_gap(fine, finer) <= precision_guard) return finer;
  throw AccuracyError("inverse_laplace: Euler inversion unstable across node counts");
}

}  // namespace hetsir::num
