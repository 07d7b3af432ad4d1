// SPDX-License-Identifier: Apache-2.0
//
// hetsir - SIR statistics for heterogeneous Poisson wireless networks
// Copyright (C) 2026 the hetsir authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at http://www.apache.org/licenses/LICENSE-2.0

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "hetsir/errors.hpp"
#include "hetsir/exppoly.hpp"
#include "hetsir/inverse_laplace.hpp"
#include "hetsir/quadrature.hpp"
#include "hetsir/special_functions.hpp"

using namespace hetsir;
using namespace hetsir::num;

namespace {

// Independent Gamma oracle: shift the argument up by 24 and evaluate the
// Stirling series with Bernoulli corrections, then divide back down.
double gamma_oracle(double a) {
  int shift = 0;
  double x = a;
  while (x < 24.0) {
    ++shift;
    x = a + shift;
  }
  const double b[6] = {1.0 / 12, -1.0 / 360, 1.0 / 1260, -1.0 / 1680,
                       1.0 / 1188, -691.0 / 360360};
  double series = 0.0;
  double xp = x;
  for (int i = 0; i < 6; ++i) {
    series += b[i] / xp;
    xp *= x * x;
  }
  double log_g = (x - 0.5) * std::log(x) - x +
                 0.5 * std::log(2.0 * 3.141592653589793238462643) + series;
  double value = std::exp(log_g);
  for (int i = shift - 1; i >= 0; --i) value /= (a + i);
  return value;
}

// Brute-force refinement oracle for finite integrals: composite Simpson.
double simpson_oracle(const std::function<double(double)>& f, double a,
                      double b, long panels) {
  double h = (b - a) / panels;
  double sum = f(a) + f(b);
  for (long i = 1; i < panels; ++i)
    sum += f(a + i * h) * (i % 2 == 1 ? 4.0 : 2.0);
  return sum * h / 3.0;
}

}  // namespace

TEST_CASE("gamma function values") {
  CHECK(gamma_fn(1.0) == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(gamma_fn(0.5) == doctest::Approx(1.7724538509055160).epsilon(1e-12));
  // High-precision series oracle.
  CHECK(gamma_fn(2.5) == doctest::Approx(gamma_oracle(2.5)).epsilon(1e-12));
  CHECK(gamma_fn(2.5) == doctest::Approx(1.3293403881791370).epsilon(1e-10));
  CHECK_THROWS_AS(gamma_fn(0.0), DomainError);
  CHECK_THROWS_AS(gamma_fn(-1.5), DomainError);
}

TEST_CASE("gamma recurrence property") {
  std::mt19937 gen(11);
  std::uniform_real_distribution<double> a_dist(0.1, 10.0);
  for (int i = 0; i < 100; ++i) {
    double a = a_dist(gen);
    CHECK(gamma_fn(a + 1.0) ==
          doctest::Approx(a * gamma_fn(a)).epsilon(1e-12));
  }
}

TEST_CASE("upper incomplete gamma values") {
  CHECK(upper_incomplete_gamma(1.0, 1.0) ==
        doctest::Approx(std::exp(-1.0)).epsilon(1e-12));
  // Direct quadrature oracles over the defining integral.
  auto tail_integral = [](double a, double y) {
    // integral over [y, Y] of t^{a-1} e^{-t}; truncated where the weight
    // underflows the oracle tolerance.
    return simpson_oracle(
        [a](double t) { return std::pow(t, a - 1.0) * std::exp(-t); }, y,
        y + 60.0, 400000);
  };
  CHECK(upper_incomplete_gamma(0.5, 1.0) ==
        doctest::Approx(tail_integral(0.5, 1.0)).epsilon(1e-9));
  CHECK(upper_incomplete_gamma(0.5, 1.0) ==
        doctest::Approx(0.2788055852949).epsilon(1e-9));
  CHECK(upper_incomplete_gamma(-0.5, 1.0) ==
        doctest::Approx(tail_integral(-0.5, 1.0)).epsilon(1e-9));
  CHECK(upper_incomplete_gamma(-0.5, 1.0) ==
        doctest::Approx(0.1781477).epsilon(1e-6));
  CHECK_THROWS_AS(upper_incomplete_gamma(0.5, 0.0), DomainError);
  CHECK_THROWS_AS(upper_incomplete_gamma(0.5, -1.0), DomainError);
}

TEST_CASE("incomplete gamma recurrence in the negative band") {
  std::mt19937 gen(12);
  std::uniform_real_distribution<double> a_dist(-0.9, -0.1);
  std::uniform_real_distribution<double> y_dist(0.1, 10.0);
  for (int i = 0; i < 100; ++i) {
    double a = a_dist(gen);
    double y = y_dist(gen);
    double lhs = upper_incomplete_gamma(a, y);
    double rhs = (upper_incomplete_gamma(a + 1.0, y) -
                  std::pow(y, a) * std::exp(-y)) /
                 a;
    CHECK(lhs == doctest::Approx(rhs).epsilon(1e-9));
  }
}

TEST_CASE("erf/erfc pair") {
  auto [e0, ec0] = erf_erfc(0.0);
  CHECK(e0 == 0.0);
  CHECK(ec0 == 1.0);
  auto [e_big, ec_big] = erf_erfc(9.0);
  CHECK(e_big == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(ec_big < 1e-15);
  // Maclaurin series oracle at x = 1.
  double series = 0.0;
  double term = 1.0;
  for (int n = 0; n < 40; ++n) {
    series += term / (2 * n + 1);
    term *= -1.0 / (n + 1);
  }
  series *= 2.0 / std::sqrt(3.141592653589793238462643);
  auto [e1, ec1] = erf_erfc(1.0);
  CHECK(e1 == doctest::Approx(series).epsilon(1e-12));
  CHECK(e1 == doctest::Approx(0.8427007929).epsilon(1e-9));
  CHECK(ec1 == doctest::Approx(0.1572992071).epsilon(1e-9));
  CHECK(e1 + ec1 == doctest::Approx(1.0).epsilon(1e-15));
  // Monotone.
  CHECK(erf_erfc(0.3).first < erf_erfc(0.31).first);
}

TEST_CASE("erfcx stays finite where exp(x^2) overflows") {
  CHECK(erfcx(1.0) ==
        doctest::Approx(std::exp(1.0) * std::erfc(1.0)).epsilon(1e-12));
  double big = erfcx(40.0);
  CHECK(big == doctest::Approx(1.0 / (40.0 * std::sqrt(3.14159265358979)))
                   .epsilon(1e-3));
  CHECK(std::isfinite(big));
}

TEST_CASE("ell function") {
  CHECK(ell(0.0, 3.0, 0.5) == 0.0);
  CHECK(ell(1.0, 1e6, 0.5) == doctest::Approx(1.0).epsilon(1e-6));
  // Quadrature oracle for Gamma(-0.5, 1).
  double g_m05 = simpson_oracle(
      [](double t) { return std::pow(t, -1.5) * std::exp(-t); }, 1.0, 61.0,
      400000);
  double expected = 1.0 * (1.0 - 0.5 * std::pow(1.0, 0.5) * g_m05);
  CHECK(ell(1.0, 1.0, 0.5) == doctest::Approx(expected).epsilon(1e-9));
  CHECK(ell(1.0, 1.0, 0.5) == doctest::Approx(0.9109261).epsilon(1e-6));

  SUBCASE("monotone nondecreasing in y, bounded by z") {
    std::mt19937 gen(13);
    std::uniform_real_distribution<double> z_dist(0.1, 10.0);
    std::uniform_real_distribution<double> x_dist(0.1, 0.9);
    for (int i = 0; i < 50; ++i) {
      double z = z_dist(gen);
      double x = x_dist(gen);
      double prev = 0.0;
      for (double y = 1e-3; y < 1e4; y *= 3.0) {
        double v = ell(z, y, x);
        CHECK(v >= prev - 1e-12);
        CHECK(v >= 0.0);
        CHECK(v <= z * (1.0 + 1e-12));
        prev = v;
      }
    }
  }

  SUBCASE("small-y asymptote Gamma(1-x) z y^x") {
    double y = 1e-8;
    double v = ell(2.0, y, 0.4);
    double asym = gamma_fn(0.6) * 2.0 * std::pow(y, 0.4);
    CHECK(v == doctest::Approx(asym).epsilon(1e-3));
  }

  SUBCASE("complex ell agrees with real ell on the real axis") {
    std::complex<double> v = ell(1.5, std::complex<double>(2.0, 0.0), 0.5);
    CHECK(v.real() == doctest::Approx(ell(1.5, 2.0, 0.5)).epsilon(1e-12));
    CHECK(std::fabs(v.imag()) < 1e-14);
  }
}

TEST_CASE("complex incomplete gamma matches the real one on the axis") {
  for (double y : {0.3, 3.0, 40.0, 300.0}) {
    std::complex<double> v = upper_incomplete_gamma(0.5, std::complex<double>(y, 0.0));
    CHECK(v.real() == doctest::Approx(upper_incomplete_gamma(0.5, y)).epsilon(1e-10));
  }
}

TEST_CASE("semi-infinite quadrature") {
  QuadratureSettings qs;
  CHECK(semi_infinite_integral([](double x) { return std::exp(-x); }, qs) ==
        doctest::Approx(1.0).epsilon(1e-9));
  CHECK(semi_infinite_integral([](double x) { return std::exp(-x * x); }, qs) ==
        doctest::Approx(0.88622692545276).epsilon(1e-9));

  SUBCASE("stretched-exponential kernel vs 1e6-panel trapezoid oracle") {
    auto f = [](double t) {
      return -std::expm1(-t) / t * std::exp(-std::sqrt(t));
    };
    // Brute-force trapezoid refinement with the sqrt(t) kink straightened
    // out by t = u^2 (the raw integrand has an infinite slope at 0). The
    // tail beyond u = 20 contributes ~2e-10.
    auto g = [&](double u) { return u == 0.0 ? 0.0 : f(u * u) * 2.0 * u; };
    const long panels = 1000000;
    const double upper = 20.0;
    double h = upper / panels;
    double sum = 0.5 * (g(0.0) + g(upper));
    for (long i = 1; i < panels; ++i) sum += g(i * h);
    double oracle = sum * h;
    CHECK(semi_infinite_integral(f, qs) ==
          doctest::Approx(oracle).epsilon(1e-7));
  }

  SUBCASE("settings validation") {
    QuadratureSettings bad;
    bad.rel_tol = 0.0;
    CHECK_THROWS_AS(integrate([](double) { return 1.0; }, 0, 1, bad),
                    DomainError);
    bad = QuadratureSettings{};
    bad.max_subdivisions = 0;
    CHECK_THROWS_AS(integrate([](double) { return 1.0; }, 0, 1, bad),
                    DomainError);
  }

  SUBCASE("non-convergence carries a partial estimate") {
    QuadratureSettings tight;
    tight.rel_tol = 1e-14;
    tight.abs_tol = 1e-300;
    tight.max_subdivisions = 2;
    bool thrown = false;
    try {
      integrate([](double x) { return std::sin(103.0 * x) * std::sqrt(x); },
                0.0, 50.0, tight);
    } catch (const ConvergenceError& e) {
      thrown = true;
      CHECK(std::isfinite(e.partial_estimate));
    }
    CHECK(thrown);
  }
}

TEST_CASE("generalized Gauss-Laguerre rules") {
  // Weights sum to Gamma(alpha+1); low moments integrate exactly.
  for (double a : {0.0, 1.0, 2.5, 7.0}) {
    const GaussRule& rule = gauss_laguerre(48, a);
    double w_sum = 0.0, m1 = 0.0, m2 = 0.0;
    for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
      w_sum += rule.weights[i];
      m1 += rule.weights[i] * rule.nodes[i];
      m2 += rule.weights[i] * rule.nodes[i] * rule.nodes[i];
    }
    CHECK(w_sum == doctest::Approx(gamma_fn(a + 1.0)).epsilon(1e-12));
    CHECK(m1 == doctest::Approx(gamma_fn(a + 2.0)).epsilon(1e-12));
    CHECK(m2 == doctest::Approx(gamma_fn(a + 3.0)).epsilon(1e-12));
  }
  // Smooth non-polynomial integrand vs oracle.
  const GaussRule& rule = gauss_laguerre(64, 0.0);
  double value = 0.0;
  for (std::size_t i = 0; i < rule.nodes.size(); ++i)
    value += rule.weights[i] / (1.0 + rule.nodes[i]);
  // int e^{-x}/(1+x) = e E1(1) = 0.596347361...
  CHECK(value == doctest::Approx(0.59634736232319).epsilon(1e-9));
}

TEST_CASE("inverse Laplace transform") {
  InverseLaplaceSettings settings;
  CHECK(inverse_laplace([](std::complex<double> s) { return 1.0 / s; }, 3.0,
                        settings) == doctest::Approx(1.0).epsilon(1e-8));
  CHECK(inverse_laplace([](std::complex<double> s) { return 1.0 / (s + 1.0); },
                        2.0, settings) ==
        doctest::Approx(std::exp(-2.0)).epsilon(1e-8));
  // Classical pair e^{-a sqrt(s)}/s <-> erfc(a / 2 sqrt(t)).
  CHECK(inverse_laplace(
            [](std::complex<double> s) {
              return std::exp(-2.0 * std::sqrt(s)) / s;
            },
            1.0, settings) == doctest::Approx(std::erfc(1.0)).epsilon(1e-8));

  SUBCASE("round trip on the transform-pair family") {
    std::mt19937 gen(17);
    std::uniform_real_distribution<double> b_dist(0.3, 3.0);
    std::uniform_real_distribution<double> t_dist(0.3, 4.0);
    for (int i = 0; i < 8; ++i) {
      double b = b_dist(gen);
      double t = t_dist(gen);
      CHECK(inverse_laplace(
                [b](std::complex<double> s) { return 1.0 / (s + b); }, t,
                settings) == doctest::Approx(std::exp(-b * t)).epsilon(1e-6));
      for (int n : {1, 2, 3}) {
        double expected = std::pow(t, n) * std::exp(-b * t);
        CHECK(inverse_laplace(
                  [b, n](std::complex<double> s) {
                    return gamma_fn(n + 1.0) / std::pow(s + b, n + 1.0);
                  },
                  t, settings) == doctest::Approx(expected).epsilon(1e-6));
      }
      double a = b;
      CHECK(inverse_laplace(
                [a](std::complex<double> s) {
                  return std::exp(-a * std::sqrt(s)) / s;
                },
                t, settings) ==
            doctest::Approx(std::erfc(a / (2.0 * std::sqrt(t)))).epsilon(1e-6));
    }
  }

  SUBCASE("Euler method agrees with Talbot on smooth transforms") {
    auto F = [](std::complex<double> s) {
      return std::exp(-std::pow(s, 0.6)) / s;
    };
    double talbot = talbot_inversion(F, 2.0, 32);
    double euler = euler_inversion(F, 2.0, 32);
    CHECK(talbot == doctest::Approx(euler).epsilon(1e-7));
    CHECK(inverse_laplace_right_plane(F, 2.0) ==
          doctest::Approx(talbot).epsilon(1e-6));
  }

  SUBCASE("settings validation") {
    InverseLaplaceSettings bad;
    bad.node_count = 7;
    CHECK_THROWS_AS(
        inverse_laplace([](std::complex<double> s) { return 1.0 / s; }, 1.0, bad),
        DomainError);
    CHECK_THROWS_AS(talbot_inversion(
                        [](std::complex<double> s) { return 1.0 / s; }, 0.0, 32),
                    DomainError);
  }
}

TEST_CASE("exppoly derivative engine") {
  SUBCASE("order zero is the identity") {
    ExpPolySum expr{{1.0, 1.0, 2.0, -0.5}};
    ExpPolySum d0 = exppoly_derivative(expr, 0);
    REQUIRE(d0.size() == 1);
    CHECK(d0[0].coefficient == 1.0);
    CHECK(d0[0].power_of_v == 1.0);
  }

  SUBCASE("chain rule: d/dv e^{-a v^{-1/2}} = (a/2) v^{-3/2} e^{-a v^{-1/2}}") {
    double a = 1.7;
    ExpPolySum expr{{1.0, 0.0, a, -0.5}};
    ExpPolySum d1 = exppoly_derivative(expr, 1);
    REQUIRE(d1.size() == 1);
    CHECK(d1[0].coefficient == doctest::Approx(a / 2.0).epsilon(1e-15));
    CHECK(d1[0].power_of_v == doctest::Approx(-1.5).epsilon(1e-15));
    CHECK(d1[0].decay_scale == a);
    CHECK(d1[0].decay_exponent == -0.5);
  }

  SUBCASE("d2 of v e^{-a/sqrt(v)} vs Richardson finite differences") {
    ExpPolySum expr{{1.0, 1.0, 1.0, -0.5}};
    ExpPolySum d2 = exppoly_derivative(expr, 2);
    auto f = [&](double v) { return exppoly_eval(expr, v); };
    auto second = [&](double h) {
      return (f(1.0 + h) - 2.0 * f(1.0) + f(1.0 - h)) / (h * h);
    };
    // Richardson extrapolation of the central second difference.
    double coarse = second(1e-3);
    double fine = second(5e-4);
    double oracle = (4.0 * fine - coarse) / 3.0;
    CHECK(exppoly_eval(d2, 1.0) == doctest::Approx(oracle).epsilon(1e-8));
  }

  SUBCASE("orders 1-6 vs stepwise finite differences on random expressions") {
    std::mt19937 gen(23);
    std::uniform_real_distribution<double> coeff(-2.0, 2.0);
    std::uniform_real_distribution<double> power(-2.0, 2.0);
    std::uniform_real_distribution<double> scale(0.1, 2.0);
    std::uniform_real_distribution<double> qexp(-1.0, 1.0);
    std::uniform_real_distribution<double> v_dist(0.6, 2.5);
    for (int trial = 0; trial < 50; ++trial) {
      ExpPolySum expr;
      int terms = 1 + trial % 3;
      for (int t = 0; t < terms; ++t) {
        double q = qexp(gen);
        if (std::fabs(q) < 0.1) q = 0.5;
        expr.push_back({coeff(gen), power(gen), scale(gen), q});
      }
      double v = v_dist(gen);
      int order = 1 + trial % 6;
      ExpPolySum lower = exppoly_derivative(expr, order - 1);
      ExpPolySum upper = exppoly_derivative(expr, order);
      auto g = [&](double u) { return exppoly_eval(lower, u); };
      double h1 = 1e-5 * v;
      double d_h = (g(v + h1) - g(v - h1)) / (2.0 * h1);
      double d_h2 = (g(v + h1 / 2) - g(v - h1 / 2)) / h1;
      double oracle = (4.0 * d_h2 - d_h) / 3.0;
      double exact = exppoly_eval(upper, v);
      double denom = std::max(std::fabs(exact), 1e-6);
      CHECK(std::fabs(exact - oracle) / denom < 1e-6);
    }
  }

  SUBCASE("order cap") {
    ExpPolySum expr{{1.0, 1.0, 1.0, 1.0}};
    CHECK_THROWS_AS(exppoly_derivative(expr, 17), CapabilityError);
    CHECK_THROWS_AS(exppoly_derivative(expr, -1), DomainError);
  }
}
