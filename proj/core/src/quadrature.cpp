// SPDX-License-Identifier: Apache-2.0
//
// hetsir - SIR statistics for heterogeneous Poisson wireless networks
// Copyright (C) 2026 the hetsir authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at http://www.apache.org/licenses/LICENSE-2.0

#include "hetsir/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <cstring>
#include <map>
#include <mutex>
#include <queue>

#include "hetsir/errors.hpp"
#include "hetsir/special_functions.hpp"

namespace hetsir::num {

namespace {

// 15-point Kronrod abscissae/weights with the embedded 7-point Gauss rule
// (QUADPACK dqk15 constants).
constexpr double kXgk[8] = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144838258730, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.0};
constexpr double kWgk[8] = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr double kWg[4] = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Panel {
  double a, b;
  double value;
  double error;
  bool operator<(const Panel& o) const { return error < o.error; }
};

Panel gk15(const std::function<double(double)>& f, double a, double b) {
  const double center = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  const double fc = f(center);
  double result_gauss = fc * kWg[3];
  double result_kronrod = fc * kWgk[7];
  for (int j = 0; j < 7; ++j) {
    double abscissa = half * kXgk[j];
    double fsum = f(center - abscissa) + f(center + abscissa);
    result_kronrod += kWgk[j] * fsum;
    if (j % 2 == 1) result_gauss += kWg[j / 2] * fsum;
  }
  Panel p;
  p.a = a;
  p.b = b;
  p.value = result_kronrod * half;
  double diff = (result_kronrod - result_gauss) * half;
  p.error = std::fabs(diff);
  return p;
}

double adaptive(const std::function<double(double)>& f, double a, double b,
                const QuadratureSettings& s) {
  std::priority_queue<Panel> heap;
  Panel whole = gk15(f, a, b);
  double total = whole.value;
  double total_error = whole.error;
  heap.push(whole);
  int splits = 0;
  while (total_error > std::max(s.abs_tol, s.rel_tol * std::fabs(total))) {
    if (splits >= s.max_subdivisions) {
      throw ConvergenceError("quadrature: subdivision budget exhausted", total);
    }
    Panel worst = heap.top();
    heap.pop();
    double mid = 0.5 * (worst.a + worst.b);
    if (!(mid > worst.a && mid < worst.b)) {
      // Interval at floating point resolution; accept what we have.
      heap.push(worst);
      break;
    }
    Panel left = gk15(f, worst.a, mid);
    Panel right = gk15(f, mid, worst.b);
    total += left.value + right.value - worst.value;
    total_error += left.error + right.error - worst.error;
    heap.push(left);
    heap.push(right);
    ++splits;
  }
  return total;
}

std::mutex g_rule_mutex;
std::map<std::pair<int, long long>, GaussRule> g_rule_cache;

// Eigenvalues of a symmetric tridiagonal matrix by the implicit QL method
// (tqli without eigenvectors). d holds the diagonal, e the subdiagonal.
void tridiagonal_eigenvalues(std::vector<double>& d, std::vector<double>& e) {
  const int n = static_cast<int>(d.size());
  e.resize(n, 0.0);
  for (int l = 0; l < n; ++l) {
    int iter = 0;
    int m;
    do {
      for (m = l; m < n - 1; ++m) {
        double dd = std::fabs(d[m]) + std::fabs(d[m + 1]);
        if (std::fabs(e[m]) <= 1e-15 * dd) break;
      }
      if (m != l) {
        if (iter++ == 60)
          throw ConvergenceError("gauss_laguerre: eigenvalue QL stalled", 0.0);
        double g = (d[l + 1] - d[l]) / (2.0 * e[l]);
        double r = std::hypot(g, 1.0);
        g = d[m] - d[l] + e[l] / (g + std::copysign(r, g));
        double s = 1.0, c = 1.0, p = 0.0;
        bool underflow = false;
        for (int i = m - 1; i >= l; --i) {
          double fi = s * e[i];
          double b = c * e[i];
          r = std::hypot(fi, g);
          e[i + 1] = r;
          if (r == 0.0) {
            d[i + 1] -= p;
            e[m] = 0.0;
            underflow = true;
            break;
          }
          s = fi / r;
          c = g / r;
          g = d[i + 1] - p;
          r = (d[i] - g) * s + 2.0 * c * b;
          p = s * r;
          d[i + 1] = g + p;
          g = c * r - b;
        }
        if (underflow) continue;
        d[l] -= p;
        e[l] = g;
        e[m] = 0.0;
      }
    } while (m != l);
  }
  std::sort(d.begin(), d.end());
}

GaussRule build_gauss_laguerre(int n, double alpha) {
  // Jacobi matrix of the generalized Laguerre recurrence.
  std::vector<double> diag(n), off(n > 1 ? n - 1 : 0);
  for (int i = 0; i < n; ++i) diag[i] = 2.0 * i + alpha + 1.0;
  for (int i = 1; i < n; ++i) off[i - 1] = std::sqrt(i * (i + alpha));

  std::vector<double> d = diag, e = off;
  tridiagonal_eigenvalues(d, e);

  // Weights through the Christoffel function: w_i = mu0 / sum_k p_k(x_i)^2
  // over the orthonormal polynomials, with mu0 = Gamma(alpha + 1).
  const double mu0 = gamma_fn(alpha + 1.0);
  GaussRule rule;
  rule.nodes = d;
  rule.weights.resize(n);
  for (int i = 0; i < n; ++i) {
    double x = d[i];
    double p_prev = 0.0;
    double p = 1.0;  // p_0 before normalization by sqrt(mu0)
    double sum = p * p;
    for (int k = 0; k < n - 1; ++k) {
      double b_next = std::sqrt((k + 1.0) * (k + 1.0 + alpha));
      double b_prev = k == 0 ? 0.0 : std::sqrt(k * (k + alpha));
      double p_next = ((x - diag[k]) * p - b_prev * p_prev) / b_next;
      p_prev = p;
      p = p_next;
      sum += p * p;
    }
    rule.weights[i] = mu0 / sum;
  }
  return rule;
}

}  // namespace

void QuadratureSettings::validate() const {
  if (!(rel_tol > 0.0)) throw DomainError("QuadratureSettings: rel_tol must be > 0");
  if (!(abs_tol > 0.0)) throw DomainError("QuadratureSettings: abs_tol must be > 0");
  if (max_subdivisions < 1)
    throw DomainError("QuadratureSettings: max_subdivisions must be >= 1");
}

double integrate(const std::function<double(double)>& f, double a, double b,
                 const QuadratureSettings& settings) {
  settings.validate();
  if (!(b > a)) return 0.0;
  return adaptive(f, a, b, settings);
}

double semi_infinite_integral(const std::function<double(double)>& f,
                              const QuadratureSettings& settings) {
  settings.validate();
  double upper = settings.upper_limit;
  double total = adaptive(f, 0.0, upper, settings);
  if (settings.tail_cutoff_policy == TailCutoffPolicy::kFixedUpperLimit)
    return total;

  // Keep doubling the window until a doubling contributes less than abs_tol
  // twice in a row (guards against integrands with slow oscillating tails).
  int quiet = 0;
  for (int step = 0; step < 60; ++step) {
    double next = upper * 2.0;
    double piece = adaptive(f, upper, next, settings);
    total += piece;
    upper = next;
    double tail_tol = std::max(settings.abs_tol, 0.5 * settings.rel_tol * std::fabs(total));
    if (std::fabs(piece) < tail_tol) {
      if (++quiet >= 2) return total;
    } else {
      quiet = 0;
    }
  }
  throw ConvergenceError("semi_infinite_integral: tail did not decay", total);
}

const GaussRule& gauss_laguerre(int n, double alpha) {
  if (n < 1) throw DomainError("gauss_laguerre requires n >= 1");
  if (!(alpha > -1.0)) throw DomainError("gauss_laguerre requires alpha > -1");
  long long alpha_bits;
  static_assert(sizeof(alpha_bits) == sizeof(alpha));
  std::memcpy(&alpha_bits, &alpha, sizeof(alpha));
  std::lock_guard<std::mutex> lock(g_rule_mutex);
  auto key = std::make_pair(n, alpha_bits);
  auto it = g_rule_cache.find(key);
  if (it == g_rule_cache.end())
    it = g_rule_cache.emplace(key, build_gauss_laguerre(n, alpha)).first;
  return it->second;
}

}  // namespace hetsir::num
