// SPDX-License-Identifier: Apache-2.0
//
// hetsir - SIR statistics for heterogeneous Poisson wireless networks
// Copyright (C) 2026 the hetsir authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at http://www.apache.org/licenses/LICENSE-2.0

#include "hetsir/exppoly.hpp"

#include <cmath>
#include <map>
#include <tuple>

#include "hetsir/errors.hpp"

namespace hetsir::num {

namespace {

constexpr int kMaxOrder = 16;

ExpPolySum derivative_once(const ExpPolySum& expr) {
  // Merge terms whose (p, a, q) keys match bitwise; identical derivation
  // paths produce identical doubles, so this keeps growth near-linear.
  std::map<std::tuple<double, double, double>, double> merged;
  auto add = [&merged](double coeff, double p, double a, double q) {
    if (coeff == 0.0) return;
    merged[{p, a, q}] += coeff;
  };
  for (const auto& term : expr) {
    if (term.coefficient == 0.0) continue;
    if (term.power_of_v != 0.0)
      add(term.coefficient * term.power_of_v, term.power_of_v - 1.0,
          term.decay_scale, term.decay_exponent);
    if (term.decay_scale != 0.0 && term.decay_exponent != 0.0)
      add(-term.coefficient * term.decay_scale * term.decay_exponent,
          term.power_of_v + term.decay_exponent - 1.0, term.decay_scale,
          term.decay_exponent);
  }
  ExpPolySum out;
  out.reserve(merged.size());
  for (const auto& [key, coeff] : merged) {
    if (coeff == 0.0) continue;
    out.push_back({coeff, std::get<0>(key), std::get<1>(key), std::get<2>(key)});
  }
  return out;
}

}  // namespace

ExpPolySum exppoly_derivative(const ExpPolySum& expr, int order) {
  if (order < 0) throw DomainError("exppoly_derivative requires order >= 0");
  if (order > kMaxOrder)
    throw CapabilityError("exppoly_derivative supports order <= 16");
  ExpPolySum current = expr;
  for (int i = 0; i < order; ++i) current = derivative_once(current);
  return current;
}

double exppoly_eval(const ExpPolySum& expr, double v) {
  if (!(v > 0.0)) throw DomainError("exppoly_eval requires v > 0");
  const double logv = std::log(v);
  double total = 0.0;
  for (const auto& term : expr) {
    double log_mag = term.power_of_v * logv -
                     term.decay_scale * std::exp(term.decay_exponent * logv);
    total += term.coefficient * std::exp(log_mag);
  }
  return total;
}

}  // namespace hetsir::num
