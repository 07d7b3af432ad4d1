// SPDX-License-Identifier: Apache-2.0
//
// hetsir - SIR statistics for heterogeneous Poisson wireless networks
// Copyright (C) 2026 the hetsir authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at http://www.apache.org/licenses/LICENSE-2.0

#include "hetsir/sirdist.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "hetsir/errors.hpp"
#include "hetsir/exppoly.hpp"
#include "hetsir/inverse_laplace.hpp"
#include "hetsir/parallel.hpp"
#include "hetsir/quadrature.hpp"
#include "hetsir/special_functions.hpp"

namespace hetsir::sir {

namespace {

constexpr double kPi = 3.141592653589793238462643;

using num::ell;
using num::gamma_fn;
using num::log_gamma;

struct NetSummary {
  double alpha;
  double x;  // 2/alpha
  double lambda_tilde;
  double c0;    // pi Gamma(1-x) lambda_tilde
  double beta;  // pi lambda_tilde, Erlang rate of D_L
};

NetSummary summarize(const NetworkConfig& net) {
  net.check();
  NetSummary s;
  s.alpha = net.alpha;
  s.x = 2.0 / net.alpha;
  s.lambda_tilde = 0.0;
  for (const auto& type : net.types)
    s.lambda_tilde += type.intensity * type.fading.fractional_moment(s.x) *
                      type.power.fractional_moment(s.x);
  s.c0 = kPi * gamma_fn(1.0 - s.x) * s.lambda_tilde;
  s.beta = kPi * s.lambda_tilde;
  return s;
}

// Conditional residual transform exponent given D:
//   log L_{I_{k,L} | D}(s) = -c0 s^x + pi lambda_tilde ell_D(s D^{-a/2}, x).
// Keeping both pieces in one exponent avoids overflowing the compensation
// factor at large s; the sum is always <= 0 for real s.
double log_conditional_residual(const NetSummary& ns, double s, double d) {
  double y = s * std::pow(d, -1.0 / ns.x);  // alpha/2 = 1/x
  return -ns.c0 * std::pow(s, ns.x) + ns.beta * ell(d, y, ns.x);
}

std::complex<double> log_conditional_residual(const NetSummary& ns,
                                              std::complex<double> s, double d) {
  std::complex<double> y = s * std::pow(d, -1.0 / ns.x);
  return -ns.c0 * std::pow(s, ns.x) + ns.beta * ell(d, y, ns.x);
}

// E over D ~ Erlang(L, beta) of the conditional residual transform; real s.
double residual_transform(const NetSummary& ns, int L, int nodes, double s) {
  if (s == 0.0) return 1.0;
  if (L == 0) return std::exp(-ns.c0 * std::pow(s, ns.x));
  const num::GaussRule& rule = num::gauss_laguerre(nodes, L - 1.0);
  const double norm = gamma_fn(static_cast<double>(L));
  double total = 0.0;
  for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
    double d = rule.nodes[i] / ns.beta;
    total += rule.weights[i] * std::exp(log_conditional_residual(ns, s, d));
  }
  return total / norm;
}

std::complex<double> residual_transform(const NetSummary& ns, int L, int nodes,
                                        std::complex<double> s) {
  if (L == 0) return std::exp(-ns.c0 * std::pow(s, ns.x));
  const num::GaussRule& rule = num::gauss_laguerre(nodes, L - 1.0);
  const double norm = gamma_fn(static_cast<double>(L));
  std::complex<double> total = 0.0;
  for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
    double d = rule.nodes[i] / ns.beta;
    std::complex<double> w = log_conditional_residual(ns, s, d);
    // |transform| <= 1; clip stray overflow from far imaginary nodes.
    if (w.real() > 0.0) w.real(0.0);
    total += rule.weights[i] * std::exp(w);
  }
  return total / norm;
}

// CCDF for a constant signal power, no cancellation, via inverse Laplace
// with a Talbot/Euler agreement check. For alpha < 4 the transform grows as
// exp(c |s|^x |cos(x arg s)|) toward the left half-plane and the fixed
// Talbot contour can overflow when the signal is many orders below the
// interference scale; the Euler nodes all sit at Re s > 0 where the
// modulus never exceeds 1, so they carry a node-doubling fallback.
double ccdf_constant_signal_ilt(const NetSummary& ns, double signal, double theta,
                                SirCdfResult::Diagnostics* diag) {
  auto F = [&](std::complex<double> s) {
    return std::exp(-ns.c0 * std::pow(s / signal, ns.x)) / s;
  };
  const int nodes = 32;
  const double t = 1.0 / theta;
  double euler = num::euler_inversion(F, t, nodes);
  double talbot = num::talbot_inversion(F, t, nodes);
  double gap = std::fabs(talbot - euler);
  if (std::isfinite(talbot) && gap <= 1e-6) {
    if (diag) {
      diag->ilt_nodes = nodes;
      diag->agreement_gap = std::max(diag->agreement_gap, gap);
    }
    return talbot;
  }
  double fine = num::euler_inversion(F, t, 2 * nodes);
  gap = std::fabs(fine - euler);
  if (!(gap <= 1e-6)) {
    double finer = num::euler_inversion(F, t, 4 * nodes);
    gap = std::fabs(finer - fine);
    fine = finer;
    if (!(gap <= 1e-6))
      throw AccuracyError("sir_cdf: inverse Laplace methods disagree");
  }
  if (diag) {
    diag->ilt_nodes = 2 * nodes;
    diag->agreement_gap = std::max(diag->agreement_gap, gap);
  }
  return fine;
}

// CCDF with cancellation for a constant signal power; Euler-only contour
// (the compensation factor is not tame in the left half-plane).
double ccdf_constant_signal_cancel_ilt(const NetSummary& ns,
                                       const CancellationSpec& cancel,
                                       double signal, double theta,
                                       SirCdfResult::Diagnostics* diag) {
  auto F = [&](std::complex<double> s) {
    return residual_transform(ns, cancel.L, cancel.erlang_quadrature_nodes,
                              s / signal) /
           s;
  };
  const int nodes = 32;
  double coarse = num::euler_inversion(F, 1.0 / theta, nodes);
  double fine = num::euler_inversion(F, 1.0 / theta, 2 * nodes);
  double gap = std::fabs(coarse - fine);
  if (!(gap <= 1e-6)) {
    double finer = num::euler_inversion(F, 1.0 / theta, 4 * nodes);
    gap = std::fabs(fine - finer);
    fine = finer;
    if (!(gap <= 1e-6))
      throw AccuracyError("sir_cdf_cancel: Euler inversion unstable");
  }
  if (diag) {
    diag->ilt_nodes = nodes;
    diag->agreement_gap = std::max(diag->agreement_gap, gap);
  }
  return fine;
}

double clamp01(double v) { return std::min(1.0, std::max(0.0, v)); }

// Expectation of g over the signal law. Gamma-shaped signals integrate the
// unit-mean density adaptively (the fixed Gauss rules converge only
// algebraically on the essential singularities these integrands have at 0);
// general product signals fall back to the nested node rules.
double expect_signal_accurate(const NetworkConfig& net, int k,
                              const SignalProfile& profile,
                              const std::function<double(double)>& g) {
  switch (profile.kind) {
    case SignalProfile::Kind::kConstant:
      return g(profile.mean);
    case SignalProfile::Kind::kGammaShape: {
      const double m = profile.shape;
      const double log_norm = m * std::log(m) - log_gamma(m);
      num::QuadratureSettings qs;
      qs.rel_tol = 1e-8;
      qs.upper_limit = 8.0;
      return num::semi_infinite_integral(
          [&](double u) {
            double log_pdf = log_norm + (m - 1.0) * std::log(u) - m * u;
            return std::exp(log_pdf) * g(u * profile.mean);
          },
          qs);
    }
    case SignalProfile::Kind::kGeneral:
      return expect_signal(net, k, g);
  }
  return 0.0;
}

// Exact CDF for an Erlang(mu, mu) normalized signal through the (mu-1)st
// derivative of v^{mu-1} L_{I_k}(mu / (v E[S])) at v = 1/theta.
double cdf_erlang_closed_form(const NetSummary& ns, int mu, double mean_signal,
                              double theta) {
  const double a = ns.c0 * std::pow(mu / mean_signal, ns.x);
  num::ExpPolySum expr{{1.0, static_cast<double>(mu - 1), a, -ns.x}};
  num::ExpPolySum deriv = num::exppoly_derivative(expr, mu - 1);
  double ccdf = num::exppoly_eval(deriv, 1.0 / theta) /
                gamma_fn(static_cast<double>(mu));
  return clamp01(1.0 - ccdf);
}

}  // namespace

void CancellationSpec::validate() const {
  if (L < 0) throw DomainError("CancellationSpec: L must be >= 0");
  if (!(omega > 0.0 && omega < 1.0))
    throw DomainError("CancellationSpec: omega must lie in (0,1)");
  if (erlang_quadrature_nodes < 4)
    throw DomainError("CancellationSpec: erlang_quadrature_nodes too small");
  if (!(d_min_quantile > 0.0 && d_min_quantile < 0.1))
    throw DomainError("CancellationSpec: d_min_quantile must lie in (0, 0.1)");
}

double interference_exponent(const NetworkConfig& net) {
  return summarize(net).c0;
}

double laplace_interference(const NetworkConfig& net, double s) {
  if (!(s >= 0.0)) throw DomainError("laplace_interference requires s >= 0");
  NetSummary ns = summarize(net);
  return std::exp(-ns.c0 * std::pow(s, ns.x));
}

double laplace_residual_interference(const NetworkConfig& net,
                                     const CancellationSpec& cancel, double s) {
  if (!(s >= 0.0)) throw DomainError("laplace_residual requires s >= 0");
  cancel.validate();
  NetSummary ns = summarize(net);
  return residual_transform(ns, cancel.L, cancel.erlang_quadrature_nodes, s);
}

double residual_compensation(const NetworkConfig& net, int L, double s,
                             int nodes) {
  if (L == 0 || s == 0.0) return 1.0;
  NetSummary ns = summarize(net);
  // log-sum-exp over the Erlang nodes so the factor alone cannot overflow.
  const num::GaussRule& rule = num::gauss_laguerre(nodes, L - 1.0);
  std::vector<double> exponents(rule.nodes.size());
  double max_exp = -1e308;
  for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
    double d = rule.nodes[i] / ns.beta;
    double y = s * std::pow(d, -1.0 / ns.x);
    exponents[i] = ns.beta * ell(d, y, ns.x);
    max_exp = std::max(max_exp, exponents[i]);
  }
  double total = 0.0;
  for (std::size_t i = 0; i < rule.nodes.size(); ++i)
    total += rule.weights[i] * std::exp(exponents[i] - max_exp);
  double log_m = max_exp + std::log(total / gamma_fn(static_cast<double>(L)));
  return log_m > 700.0 ? std::numeric_limits<double>::infinity()
                       : std::exp(log_m);
}

double laplace_residual_upper_bound(const NetworkConfig& net,
                                    const CancellationSpec& cancel, double s,
                                    bool* sensitive) {
  cancel.validate();
  if (cancel.L < 1)
    throw DomainError("laplace_residual_upper_bound needs L >= 1");
  if (!(s >= 0.0))
    throw DomainError("laplace_residual_upper_bound requires s >= 0");
  NetSummary ns = summarize(net);
  if (s == 0.0) {
    if (sensitive) *sensitive = false;
    return 1.0;
  }

  const double c = ns.beta * s * std::pow(cancel.omega, -1.0 / ns.x);
  const double tail_power = 1.0 - 1.0 / ns.x;  // 1 - alpha/2 < 0
  const int L = cancel.L;
  const double log_norm =
      L * std::log(ns.beta) - log_gamma(static_cast<double>(L));

  auto truncated_mgf = [&](double quantile) {
    // Lower truncation point of the Erlang law at the given quantile.
    double lo = 0.0, hi = (L + 40.0) / ns.beta;
    for (int i = 0; i < 200; ++i) {
      double mid = 0.5 * (lo + hi);
      if (num::regularized_gamma_p(L, ns.beta * mid) < quantile)
        lo = mid;
      else
        hi = mid;
    }
    const double q = 0.5 * (lo + hi);
    auto integrand = [&](double v) {
      double u = q + v;
      double log_f = log_norm + (L - 1.0) * std::log(u) - ns.beta * u +
                     c * std::pow(u, tail_power);
      return log_f > 700.0 ? std::exp(700.0) : std::exp(log_f);
    };
    num::QuadratureSettings qs;
    qs.rel_tol = 1e-9;
    qs.upper_limit = (L + 10.0) / ns.beta;
    double mass = 1.0 - quantile;  // conditional expectation over D >= q
    return num::semi_infinite_integral(integrand, qs) / mass;
  };

  double value = truncated_mgf(cancel.d_min_quantile);
  double halved = truncated_mgf(0.5 * cancel.d_min_quantile);
  if (sensitive)
    *sensitive = std::fabs(halved - value) > 0.01 * std::fabs(value);
  return std::exp(-ns.c0 * std::pow(s, ns.x)) * value;
}

SirCdfResult sir_cdf(const NetworkConfig& net, int k, double theta) {
  if (!(theta > 0.0)) throw DomainError("sir_cdf requires theta > 0");
  NetSummary ns = summarize(net);
  SignalProfile profile = signal_profile(net, k);
  SirCdfResult result;

  // (i) Erlang-distributed normalized signal: exact derivative closed form.
  if (profile.kind == SignalProfile::Kind::kGammaShape &&
      profile.integer_shape && profile.shape <= 16.5) {
    int mu = static_cast<int>(std::lround(profile.shape));
    result.value = cdf_erlang_closed_form(ns, mu, profile.mean, theta);
    result.method = CdfMethod::kClosedForm;
    return result;
  }

  if (ns.alpha == 4.0) {
    // (ii)/(iii) erf closed form, averaged over the signal when random.
    auto erf_form = [&](double s_val) {
      return std::erf(0.5 * ns.c0 * std::sqrt(theta / s_val));
    };
    result.value = clamp01(expect_signal_accurate(net, k, profile, erf_form));
    result.method = CdfMethod::kErfAlpha4;
    return result;
  }

  // (iv) numerical inverse Laplace; expectation over the signal outside.
  result.method = CdfMethod::kInverseLaplace;
  if (profile.kind == SignalProfile::Kind::kConstant) {
    result.value = clamp01(1.0 - ccdf_constant_signal_ilt(ns, profile.mean, theta,
                                                          &result.diagnostics));
    return result;
  }
  double ccdf = expect_signal_accurate(net, k, profile, [&](double s_val) {
    return ccdf_constant_signal_ilt(ns, s_val, theta, &result.diagnostics);
  });
  result.value = clamp01(1.0 - ccdf);
  return result;
}

SirCdfResult sir_cdf_cancel(const NetworkConfig& net,
                            const CancellationSpec& cancel, int k,
                            double theta) {
  if (!(theta > 0.0)) throw DomainError("sir_cdf_cancel requires theta > 0");
  cancel.validate();
  if (cancel.L == 0) return sir_cdf(net, k, theta);
  NetSummary ns = summarize(net);
  SignalProfile profile = signal_profile(net, k);
  SirCdfResult result;

  // Exponential signal: F = 1 - L_{I_k}(theta/E[S]) M_ell(pi lambda_tilde).
  if (profile.kind == SignalProfile::Kind::kGammaShape &&
      std::fabs(profile.shape - 1.0) < 1e-12) {
    double s = theta / profile.mean;
    result.value = clamp01(
        1.0 - residual_transform(ns, cancel.L, cancel.erlang_quadrature_nodes, s));
    result.method = CdfMethod::kClosedForm;
    return result;
  }

  result.method = CdfMethod::kInverseLaplace;
  if (profile.kind == SignalProfile::Kind::kConstant) {
    result.value = clamp01(
        1.0 - ccdf_constant_signal_cancel_ilt(ns, cancel, profile.mean, theta,
                                              &result.diagnostics));
    return result;
  }
  double ccdf = expect_signal_accurate(net, k, profile, [&](double s_val) {
    return ccdf_constant_signal_cancel_ilt(ns, cancel, s_val, theta,
                                           &result.diagnostics);
  });
  result.value = clamp01(1.0 - ccdf);
  return result;
}

std::pair<double, double> sir_cdf_bounds(const NetworkConfig& net, int k,
                                         double theta) {
  if (!(theta > 0.0)) throw DomainError("sir_cdf_bounds requires theta > 0");
  NetSummary ns = summarize(net);
  double neg_moment = signal_moment(net, k, -ns.x);  // throws if divergent
  double upper =
      std::min(1.0, kPi * ns.lambda_tilde * neg_moment * std::pow(theta, ns.x));

  double lower;
  if (ns.alpha == 4.0) {
    double q = signal_moment(net, k, 0.5) / (ns.c0 * std::sqrt(theta));
    lower = num::erfcx(q);
    // Tighter erf upper bound available in closed form at alpha = 4.
    upper = std::min(upper, std::erf(0.5 * ns.c0 * std::sqrt(theta) * neg_moment));
  } else {
    double pos_moment = signal_moment(net, k, ns.x);
    auto F = [&](std::complex<double> s) {
      std::complex<double> sx = std::pow(s, ns.x);
      return ns.c0 / (std::pow(s, 1.0 - ns.x) * (ns.c0 * sx + pos_moment));
    };
    num::InverseLaplaceSettings ils;
    lower = num::inverse_laplace(F, 1.0 / theta, ils);
  }
  lower = clamp01(lower);
  upper = clamp01(upper);
  if (lower > upper) lower = upper;
  return {lower, upper};
}

double sir_cdf_taylor(const NetworkConfig& net, int k, double theta,
                      bool* quality_ok) {
  if (!(theta > 0.0)) throw DomainError("sir_cdf_taylor requires theta > 0");
  NetSummary ns = summarize(net);
  double scale = kPi * ns.lambda_tilde * signal_moment(net, k, -ns.x) *
                 std::pow(theta, ns.x);
  if (quality_ok) *quality_ok = scale <= 0.1;

  const int n_max = static_cast<int>(std::floor(ns.alpha / 2.0));
  double sum = 0.0;
  double base =
      gamma_fn(1.0 - ns.x) * kPi * std::pow(theta, ns.x) * ns.lambda_tilde;
  for (int n = 1; n <= n_max; ++n) {
    double inv_gamma = num::reciprocal_gamma(1.0 - 2.0 * n / ns.alpha);
    if (inv_gamma == 0.0) continue;
    double moment = signal_moment(net, k, -2.0 * n / ns.alpha);
    double sign = (n % 2 == 1) ? 1.0 : -1.0;
    sum += sign * inv_gamma * std::pow(base, n) * moment;
  }
  return sum;
}

double sir_cdf_cancel_lower_bound_alpha4(const NetworkConfig& net,
                                         const CancellationSpec& cancel, int k,
                                         double theta) {
  if (net.alpha != 4.0)
    throw CapabilityError("cancel lower bound requires alpha = 4");
  cancel.validate();
  if (cancel.L < 2)
    throw CapabilityError(
        "E[1/D_L] is infinite for L = 1; evaluate sir_cdf_cancel instead");
  if (!(theta > 0.0)) throw DomainError("requires theta > 0");
  NetSummary ns = summarize(net);

  // E[(omega^2 D_L)^{-1}] with D_L ~ Erlang(L, pi lambda_tilde).
  double inv_d_mean =
      ns.beta / (cancel.L - 1.0) / (cancel.omega * cancel.omega);
  double lt2 = ns.lambda_tilde * ns.lambda_tilde;
  auto term = [&](double s_val) {
    double erf_part = std::erf(0.5 * ns.c0 * std::sqrt(theta / s_val));
    double corr = kPi * kPi * lt2 * std::pow(theta, 1.5) /
                  (2.0 * std::pow(s_val, 1.5)) *
                  std::exp(-kPi * kPi * kPi * lt2 * theta / (4.0 * s_val));
    return erf_part - corr * inv_d_mean;
  };
  SignalProfile profile = signal_profile(net, k);
  double value = expect_signal_accurate(net, k, profile, term);
  return std::max(0.0, value);
}

double sir_fractional_moment(const NetworkConfig& net, int k, double delta) {
  if (!(delta > 0.0))
    throw DomainError("sir_fractional_moment requires delta > 0");
  NetSummary ns = summarize(net);
  double es = mean_signal(net, k);
  double half_da = 0.5 * delta * ns.alpha;
  return std::exp(log_gamma(1.0 + half_da) + delta * std::log(es) -
                  half_da * std::log(ns.c0));
}

double sir_fractional_moment_cancel(const NetworkConfig& net,
                                    const CancellationSpec& cancel, int k,
                                    double delta) {
  if (!(delta > 0.0)) throw DomainError("requires delta > 0");
  cancel.validate();
  NetSummary ns = summarize(net);
  double es = mean_signal(net, k);
  if (cancel.L == 0) return sir_fractional_moment(net, k, delta);

  // The integrand is 1 at t = 0 and decays as a stretched exponential;
  // scale the initial window to where the plain-moment mass lives.
  double plain = sir_fractional_moment(net, k, delta);
  num::QuadratureSettings qs;
  qs.rel_tol = 1e-8;
  qs.upper_limit = std::max(1.0, 4.0 * plain);
  auto integrand = [&](double t) {
    double s = std::pow(t, 1.0 / delta) / es;
    return residual_transform(ns, cancel.L, cancel.erlang_quadrature_nodes, s);
  };
  return num::semi_infinite_integral(integrand, qs);
}

std::vector<SirCdfResult> sir_cdf_grid(const NetworkConfig& net, int k,
                                       const std::vector<double>& thetas) {
  std::vector<SirCdfResult> out(thetas.size());
  parallel_for(static_cast<std::int64_t>(thetas.size()),
               [&](std::int64_t i) { out[i] = sir_cdf(net, k, thetas[i]); });
  return out;
}

}  // namespace hetsir::sir
