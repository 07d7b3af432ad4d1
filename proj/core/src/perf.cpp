// SPDX-License-Identifier: Apache-2.0
//
// hetsir - SIR statistics for heterogeneous Poisson wireless networks
// Copyright (C) 2026 the hetsir authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at http://www.apache.org/licenses/LICENSE-2.0

#include "hetsir/perf.hpp"

#include <algorithm>
#include <cmath>

#include "hetsir/errors.hpp"
#include "hetsir/exppoly.hpp"
#include "hetsir/quadrature.hpp"
#include "hetsir/special_functions.hpp"

namespace hetsir::perf {

namespace {

constexpr double kPi = 3.141592653589793238462643;
constexpr double kLn2 = 0.693147180559945309417232;

using num::gamma_fn;
using num::log_gamma;

/// Network with the power-control rule substituted: constant mean powers and
/// the requested exponents. All PC formulas are expressed relative to the
/// no-power-control signal S = P_mean H R^{-alpha}.
NetworkConfig apply_pc(const NetworkConfig& net, const PowerControlSpec& pc) {
  pc.validate(net.K());
  NetworkConfig out = net;
  for (int j = 0; j < net.K(); ++j) {
    out.types[j].power = DistributionSpec::constant(pc.mean_power[j]);
    out.types[j].pc_exponent = pc.gamma[j];
  }
  return out;
}

double interference_exponent_pc(const NetworkConfig& pc_net) {
  return kPi * gamma_fn(1.0 - 2.0 / pc_net.alpha) *
         derive_intensities(pc_net).lambda_tilde_pc;
}

/// 1 - L_{S_hat}(t) evaluated without cancellation for small t.
double one_minus_laplace_hat(const NetworkConfig& net, int k, double t) {
  SignalProfile profile = signal_profile(net, k);
  switch (profile.kind) {
    case SignalProfile::Kind::kConstant:
      return -std::expm1(-t);
    case SignalProfile::Kind::kGammaShape:
      return -std::expm1(-profile.shape * std::log1p(t / profile.shape));
    case SignalProfile::Kind::kGeneral:
      return 1.0 - laplace_signal_hat(net, k, t);
  }
  return 0.0;
}

num::QuadratureSettings capacity_settings(double theta_scale) {
  num::QuadratureSettings qs;
  qs.rel_tol = 1e-9;
  qs.abs_tol = 1e-14;
  qs.max_subdivisions = 4000;
  qs.upper_limit = std::max(64.0, 8.0 * theta_scale);
  return qs;
}

/// Where the interference transform has decayed to ~e^{-8}: the natural
/// upper scale of every capacity integrand.
double capacity_scale(double c0, double x, double mean_signal) {
  return mean_signal * std::pow(8.0 / c0, 1.0 / x);
}

/// Alternating series for the constant-signal capacity. Returns true and the
/// sum only when the series numerically converged before its asymptotic
/// terms start growing.
bool constant_signal_capacity_series(double alpha, double c0, double signal,
                                     double* out) {
  const double log_ratio = std::log(signal) - 0.5 * alpha * std::log(c0);
  double sum = 0.0;
  double prev_abs = 1e308;
  for (int n = 1; n <= 400; ++n) {
    double log_term = log_gamma(0.5 * alpha * n) + n * log_ratio -
                      log_gamma(n + 1.0);
    if (log_term > 600.0) return false;
    double term = std::exp(log_term);
    if (term > prev_abs) return false;  // asymptotic regime reached
    sum += (n % 2 == 1 ? term : -term);
    if (term < 1e-13 * std::max(std::fabs(sum), 1e-300)) {
      *out = sum * alpha / (2.0 * kLn2);
      return true;
    }
    prev_abs = term;
  }
  return false;
}

double golden_section_max(const std::function<double(double)>& f, double lo,
                          double hi, double rel_tol, int* evals) {
  const double inv_phi = 0.6180339887498949;
  double a = lo, b = hi;
  double c = b - inv_phi * (b - a);
  double d = a + inv_phi * (b - a);
  double fc = f(c), fd = f(d);
  *evals += 2;
  while (std::fabs(b - a) > rel_tol * (std::fabs(a) + std::fabs(b)) * 0.5) {
    if (fc > fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - inv_phi * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + inv_phi * (b - a);
      fd = f(d);
    }
    ++(*evals);
    if (*evals > 400) break;
  }
  return fc > fd ? c : d;
}

}  // namespace

PowerControlSpec PowerControlSpec::from_network(const NetworkConfig& net) {
  PowerControlSpec pc;
  for (const auto& type : net.types) {
    pc.gamma.push_back(type.pc_exponent);
    pc.mean_power.push_back(type.power.mean());
  }
  return pc;
}

PowerControlSpec PowerControlSpec::uniform(const NetworkConfig& net,
                                           double gamma) {
  PowerControlSpec pc = from_network(net);
  std::fill(pc.gamma.begin(), pc.gamma.end(), gamma);
  return pc;
}

void PowerControlSpec::validate(int K) const {
  if (static_cast<int>(gamma.size()) != K ||
      static_cast<int>(mean_power.size()) != K)
    throw DomainError("PowerControlSpec: per-type vectors must have length K");
  for (double g : gamma)
    if (!(g >= -1.0)) throw DomainError("PowerControlSpec: gamma must be >= -1");
  for (double p : mean_power)
    if (!(p > 0.0)) throw DomainError("PowerControlSpec: mean power must be > 0");
}

bool PowerControlSpec::all_zero() const {
  return std::all_of(gamma.begin(), gamma.end(),
                     [](double g) { return g == 0.0; });
}

namespace {

/// Expectation of g over the signal law; adaptive over the density for
/// gamma-shaped signals, nested node rules otherwise.
double expect_signal_dense(const NetworkConfig& net, int k,
                           const std::function<double(double)>& g) {
  SignalProfile profile = signal_profile(net, k);
  switch (profile.kind) {
    case SignalProfile::Kind::kConstant:
      return g(profile.mean);
    case SignalProfile::Kind::kGammaShape: {
      const double m = profile.shape;
      const double log_norm = m * std::log(m) - log_gamma(m);
      num::QuadratureSettings qs;
      qs.rel_tol = 1e-9;
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

/// L_{Z^{-1}}(s) = E[e^{-s/Z}]. The integrand has an essential singularity
/// at z = 0 where fixed Gauss rules converge only algebraically, so gamma
/// laws integrate their density adaptively.
double laplace_reciprocal(const DistributionSpec& z, double s) {
  if (s == 0.0) return 1.0;
  if (z.is_constant()) return std::exp(-s / z.mean());
  const double m = z.shape();
  const double scale = z.mean() / m;
  const double log_norm = -m * std::log(scale) - log_gamma(m);
  num::QuadratureSettings qs;
  qs.rel_tol = 1e-10;
  qs.upper_limit = std::max(8.0 * z.mean(), 8.0 * std::sqrt(s));
  return num::semi_infinite_integral(
      [&](double zv) {
        double log_pdf = log_norm + (m - 1.0) * std::log(zv) - zv / scale;
        return std::exp(log_pdf - s / zv);
      },
      qs);
}

}  // namespace

double shannon_transform(const DistributionSpec& z, double rho) {
  if (!(rho >= 0.0)) throw DomainError("shannon_transform requires rho >= 0");
  if (rho == 0.0) return 0.0;
  return shannon_transform(z, DistributionSpec::constant(rho));
}

double shannon_transform(const DistributionSpec& z, const DistributionSpec& rho) {
  num::QuadratureSettings qs;
  qs.rel_tol = 1e-9;
  qs.max_subdivisions = 2000;
  qs.upper_limit = std::sqrt(std::max(64.0, 64.0 * z.mean()));
  // Integrated in s = u^2: when E[1/Z] diverges the kernel rises like a
  // fractional power of s at the origin and the substitution restores the
  // quadrature's convergence rate there.
  return num::semi_infinite_integral(
      [&](double u) {
        double s = u * u;
        if (s == 0.0) return 0.0;
        double kernel = rho.is_constant() ? -std::expm1(-rho.mean() * s)
                                          : 1.0 - rho.laplace(s);
        return 2.0 * kernel / u * laplace_reciprocal(z, s);
      },
      qs);
}

double success_prob(const NetworkConfig& net, int k, double theta) {
  return 1.0 - sir::sir_cdf(net, k, theta).value;
}

std::pair<double, double> success_prob_bounds(const NetworkConfig& net, int k,
                                              double theta) {
  auto [cdf_lo, cdf_hi] = sir::sir_cdf_bounds(net, k, theta);
  return {1.0 - cdf_hi, 1.0 - cdf_lo};
}

double success_prob_cancel(const NetworkConfig& net,
                           const sir::CancellationSpec& cancel, int k,
                           double theta) {
  return 1.0 - sir::sir_cdf_cancel(net, cancel, k, theta).value;
}

double success_prob_cancel_upper(const NetworkConfig& net,
                                 const sir::CancellationSpec& cancel, int k,
                                 double theta, bool* sensitive) {
  if (!(theta > 0.0)) throw DomainError("requires theta > 0");
  cancel.validate();
  SignalProfile profile = signal_profile(net, k);
  if (profile.kind == SignalProfile::Kind::kGammaShape &&
      std::fabs(profile.shape - 1.0) < 1e-12) {
    // Exponential signal: bound transform evaluated at theta / E[S].
    double v = sir::laplace_residual_upper_bound(net, cancel,
                                                 theta / profile.mean, sensitive);
    return std::min(1.0, v);
  }
  // General signal: average the constant-signal bound over the signal law.
  // This swaps the inverse transform and the expectation, both linear.
  bool any_sensitive = false;
  auto bound_for = [&](double s_val) {
    bool s_flag = false;
    double v =
        sir::laplace_residual_upper_bound(net, cancel, theta / s_val, &s_flag);
    any_sensitive = any_sensitive || s_flag;
    return std::min(1.0, v);
  };
  double value = profile.kind == SignalProfile::Kind::kConstant
                     ? bound_for(profile.mean)
                     : expect_signal(net, k, bound_for, 32);
  if (sensitive) *sensitive = any_sensitive;
  return std::min(1.0, value);
}

FadingRegion fading_region(double theta, int m, double alpha) {
  if (!(theta > 0.0)) throw DomainError("fading_region requires theta > 0");
  if (m < 1) throw DomainError("fading_region requires integer m >= 1");
  if (!(alpha > 2.0)) throw DomainError("fading_region requires alpha > 2");
  const double x = 2.0 / alpha;
  FadingRegion region;

  if (alpha == 4.0 && m == 1) {
    // Exact crossover of the Rayleigh and constant-signal closed forms:
    // exp(-sqrt(pi theta) L) = erfc(sqrt(theta) L).
    auto h = [&](double lam) {
      return std::exp(-std::sqrt(kPi * theta) * lam) -
             std::erfc(std::sqrt(theta) * lam);
    };
    double lo = 1e-12, hi = 10.0 / std::sqrt(theta);
    if (!(h(lo) < 0.0) || !(h(hi) > 0.0)) {
      region.empty = true;
      return region;
    }
    for (int i = 0; i < 200; ++i) {
      double mid = 0.5 * (lo + hi);
      (h(mid) < 0.0 ? lo : hi) = mid;
    }
    region.upper = 0.5 * (lo + hi);
    return region;
  }

  // Sufficient condition: exp(-Gamma(1-x)(m theta)^x L) <= 1 - varsigma theta^x L.
  double varsigma = 1.0;
  if (m > 1) {
    double prod = 1.0;
    for (int i = 1; i <= m - 1; ++i) prod *= (i - x);
    varsigma = gamma_fn(static_cast<double>(m)) / prod;
  }
  const double slope_exp = gamma_fn(1.0 - x) * std::pow(m * theta, x);
  const double slope_lin = varsigma * std::pow(theta, x);
  if (slope_exp <= slope_lin) {
    region.empty = true;  // condition fails already at Lambda -> 0+
    return region;
  }
  auto phi = [&](double lam) {
    return 1.0 - slope_lin * lam - std::exp(-slope_exp * lam);
  };
  double lo = 1e-12, hi = 1.0 / slope_lin;
  for (int i = 0; i < 200; ++i) {
    double mid = 0.5 * (lo + hi);
    (phi(mid) > 0.0 ? lo : hi) = mid;
  }
  region.upper = 0.5 * (lo + hi);
  return region;
}

PcSuccessResult success_prob_pc(const NetworkConfig& net,
                                const PowerControlSpec& pc, int k,
                                double theta) {
  if (!(theta > 0.0)) throw DomainError("requires theta > 0");
  PcSuccessResult result;
  if (pc.all_zero()) {
    NetworkConfig base = apply_pc(net, pc);
    result.value = success_prob(base, k, theta);
    result.lower = result.upper = result.value;
    result.exact = true;
    return result;
  }
  NetworkConfig pcn = apply_pc(net, pc);
  const double x = 2.0 / net.alpha;
  const double gamma_k = pc.gamma[k];
  if (gamma_k == -1.0)
    throw DivergenceError(
        "channel inversion (gamma = -1): E[S^{-1}] diverges for fading signals");

  const double c0_pc = interference_exponent_pc(pcn);
  const double lambda_pc = c0_pc / (kPi * gamma_fn(1.0 - x));
  const double moment_gamma = signal_moment(pcn, k, gamma_k);
  const double mean_s = mean_signal(pcn, k);

  // Lower bound (any alpha).
  double neg = signal_moment(pcn, k, -2.0 * (1.0 + gamma_k) / net.alpha);
  result.lower = std::max(
      0.0, 1.0 - kPi * lambda_pc * std::pow(moment_gamma, x) * neg *
                     std::pow(theta, x));

  // Upper bound via the fractional moment of the interference.
  double arg = gamma_fn(1.0 + net.alpha / (2.0 * (1.0 + gamma_k))) *
               std::pow(theta * moment_gamma, 1.0 / (1.0 + gamma_k)) /
               std::pow(c0_pc, net.alpha / (2.0 * (1.0 + gamma_k)));
  SignalProfile profile = signal_profile(pcn, k);
  auto ccdf_s = [&](double v) {
    if (profile.kind == SignalProfile::Kind::kConstant)
      return v < profile.mean ? 1.0 : 0.0;
    if (profile.kind == SignalProfile::Kind::kGammaShape) {
      double m = profile.shape;
      return 1.0 - num::regularized_gamma_p(m, v * m / profile.mean);
    }
    return expect_signal_dense(pcn, k, [&](double s_val) {
      return s_val > v ? 1.0 : 0.0;
    });
  };
  result.upper = std::min(1.0, ccdf_s(arg));

  // The upper bound leans on E[Fc(Z)] <= Fc(E[Z]), a concavity-type
  // hypothesis on the signal's CCDF; probe it over the signal's own support
  // before trusting the bound (exponential-family signals have convex CCDFs
  // there, so the bound is routinely reported but untrusted).
  result.ccdf_hypothesis_ok = true;
  for (double scale : {0.25, 0.5, 1.0, 2.0, 4.0}) {
    double v = mean_s * scale;
    double h = 0.05 * v;
    double second = ccdf_s(v + h) - 2.0 * ccdf_s(v) + ccdf_s(v - h);
    if (second > 1e-9) {
      result.ccdf_hypothesis_ok = false;
      break;
    }
  }

  if (net.alpha == 4.0) {
    // Exact: expectation of erfc over the no-power-control signal law.
    double pre = 0.5 * kPi * std::sqrt(kPi) * lambda_pc;
    result.value = expect_signal_dense(pcn, k, [&](double s_val) {
      return std::erfc(pre * std::sqrt(theta * moment_gamma /
                                       std::pow(s_val, gamma_k + 1.0)));
    });
    result.exact = true;
  } else {
    result.value = 0.5 * (result.lower + result.upper);
    result.exact = false;
  }
  return result;
}

PcBenefit pc_benefit_check(const NetworkConfig& net, const PowerControlSpec& pc,
                           int k, double theta) {
  PcBenefit out;
  NetworkConfig base = apply_pc(net, PowerControlSpec::uniform(net, 0.0));
  // Keep the mean powers of the candidate scheme.
  for (int j = 0; j < net.K(); ++j)
    base.types[j].power = DistributionSpec::constant(pc.mean_power[j]);
  double plain = success_prob(base, k, theta);
  PcSuccessResult with_pc = success_prob_pc(net, pc, k, theta);
  out.margin = with_pc.value - plain;
  out.benefits = out.margin > 0.0;
  return out;
}

double success_prob_simo(const NetworkConfig& net, int k, int rx_antennas,
                         double theta) {
  if (net.alpha != 4.0)
    throw CapabilityError("success_prob_simo closed form requires alpha = 4");
  if (rx_antennas < 1) throw DomainError("rx_antennas must be >= 1");
  if (rx_antennas > 16)
    throw CapabilityError("SIMO derivative order supported up to M_r = 16");
  if (!(theta > 0.0)) throw DomainError("requires theta > 0");
  const auto& type = net.types.at(k);
  if (!type.power.is_constant() || !type.distance.is_constant())
    throw DomainError("SIMO closed form needs constant power and distance");

  const int mr = rx_antennas;
  const double c0 = sir::interference_exponent(net);  // pi^{3/2} lambda_tilde
  const double mean_s = mr * type.power.mean() *
                        std::pow(type.distance.mean(), -net.alpha);
  const double c = c0 * std::sqrt(theta / mean_s);

  // ((-1)^{Mr-1} Mr^{Mr} / (Mr-1)!) d^{Mr-1}/dy^{Mr-1} [y^{-1} e^{-c sqrt(y)}] at y = Mr.
  num::ExpPolySum expr{{1.0, -1.0, c, 0.5}};
  num::ExpPolySum deriv = num::exppoly_derivative(expr, mr - 1);
  double sign = (mr - 1) % 2 == 0 ? 1.0 : -1.0;
  double coeff = sign * std::pow(static_cast<double>(mr), mr) /
                 gamma_fn(static_cast<double>(mr));
  double p = coeff * num::exppoly_eval(deriv, static_cast<double>(mr));
  return std::min(1.0, std::max(0.0, p));
}

double ergodic_capacity(const NetworkConfig& net, int k) {
  net.check();
  const double x = 2.0 / net.alpha;
  const double c0 = sir::interference_exponent(net);
  const double mean_s = mean_signal(net, k);
  SignalProfile profile = signal_profile(net, k);

  auto integrand = [&](double t) {
    return one_minus_laplace_hat(net, k, t) / t *
           std::exp(-c0 * std::pow(t / mean_s, x));
  };
  double value = num::semi_infinite_integral(
                     integrand, capacity_settings(capacity_scale(c0, x, mean_s))) /
                 kLn2;

  if (profile.kind == SignalProfile::Kind::kConstant) {
    double series = 0.0;
    if (constant_signal_capacity_series(net.alpha, c0, profile.mean, &series) &&
        std::fabs(series - value) > 1e-5 * std::max(1.0, std::fabs(value)))
      throw AccuracyError(
          "ergodic_capacity: quadrature and series cross-check disagree");
  }
  return value;
}

double ergodic_capacity_via_success(const NetworkConfig& net, int k) {
  const double x = 2.0 / net.alpha;
  const double c0 = sir::interference_exponent(net);
  const double mean_s = mean_signal(net, k);
  auto integrand = [&](double t) {
    return success_prob(net, k, t) / (1.0 + t);
  };
  return num::semi_infinite_integral(
             integrand, capacity_settings(capacity_scale(c0, x, mean_s))) /
         kLn2;
}

double ergodic_capacity_cancel(const NetworkConfig& net,
                               const sir::CancellationSpec& cancel, int k) {
  cancel.validate();
  if (cancel.L == 0) return ergodic_capacity(net, k);
  const double x = 2.0 / net.alpha;
  const double c0 = sir::interference_exponent(net);
  const double mean_s = mean_signal(net, k);
  auto integrand = [&](double t) {
    return one_minus_laplace_hat(net, k, t) / t *
           sir::laplace_residual_interference(net, cancel, t / mean_s);
  };
  return num::semi_infinite_integral(
             integrand, capacity_settings(capacity_scale(c0, x, mean_s))) /
         kLn2;
}

double ergodic_capacity_cancel_upper(const NetworkConfig& net,
                                     const sir::CancellationSpec& cancel, int k,
                                     bool* sensitive) {
  cancel.validate();
  if (cancel.L == 0) return ergodic_capacity(net, k);
  const double x = 2.0 / net.alpha;
  const double c0 = sir::interference_exponent(net);
  const double mean_s = mean_signal(net, k);
  bool any_sensitive = false;
  // The truncated-MGF factor eventually outgrows the interference transform
  // (its exponent is linear in the argument against a stretched-exponential
  // decay), which would make the literal bound integral diverge. Where the
  // bound factor stops carrying information (>= 1) the exact residual
  // transform takes over; each piece dominates its counterpart, so the sum
  // still upper-bounds the cancellation capacity.
  auto integrand = [&](double t) {
    bool flag = false;
    double bound =
        sir::laplace_residual_upper_bound(net, cancel, t / mean_s, &flag);
    any_sensitive = any_sensitive || flag;
    double factor =
        bound < 1.0 ? bound
                    : sir::laplace_residual_interference(net, cancel, t / mean_s);
    return one_minus_laplace_hat(net, k, t) / t * factor;
  };
  num::QuadratureSettings qs = capacity_settings(capacity_scale(c0, x, mean_s));
  qs.rel_tol = 1e-7;  // each node runs an inner adaptive integral
  double value = num::semi_infinite_integral(integrand, qs) / kLn2;
  if (sensitive) *sensitive = any_sensitive;
  return value;
}

PcCapacityResult ergodic_capacity_pc(const NetworkConfig& net,
                                     const PowerControlSpec& pc, int k) {
  PcCapacityResult result;
  if (pc.all_zero()) {
    NetworkConfig base = apply_pc(net, pc);
    result.value = ergodic_capacity(base, k);
    result.lower = result.upper = result.value;
    return result;
  }
  const double gamma_k = pc.gamma.at(k);
  if (gamma_k == -1.0) {
    // Channel inversion: E[S^{-1}] diverges, the interference transform
    // argument is infinite and the capacity collapses.
    result.value = result.lower = result.upper = 0.0;
    result.note = "channel inversion (gamma = -1) forces zero capacity";
    return result;
  }

  NetworkConfig pcn = apply_pc(net, pc);
  const double x = 2.0 / net.alpha;
  const double c0_pc = interference_exponent_pc(pcn);
  const double moment_gamma = signal_moment(pcn, k, gamma_k);
  const double moment_gamma1 = signal_moment(pcn, k, 1.0 + gamma_k);
  const double mean_s = mean_signal(pcn, k);
  const double s_scale = moment_gamma / moment_gamma1;  // 1/E[S^pc]

  auto laplace_ipc = [&](double t) {
    return std::exp(-c0_pc * std::pow(t * s_scale, x));
  };
  auto one_minus_hat_pc = [&](double t) {
    return 1.0 - expect_signal_dense(pcn, k, [&](double v) {
             return std::exp(-t * std::pow(v, 1.0 + gamma_k) / moment_gamma1);
           });
  };
  double scale = capacity_scale(c0_pc, x, 1.0 / s_scale);
  result.value = num::semi_infinite_integral(
                     [&](double t) {
                       return one_minus_hat_pc(t) / t * laplace_ipc(t);
                     },
                     capacity_settings(scale)) /
                 kLn2;
  result.upper = num::semi_infinite_integral(
                     [&](double t) {
                       return -std::expm1(-t) / t * laplace_ipc(t);
                     },
                     capacity_settings(scale)) /
                 kLn2;
  result.lower = num::semi_infinite_integral(
                     [&](double t) { return laplace_ipc(t) / (1.0 + t); },
                     capacity_settings(scale)) /
                 kLn2;

  // Benefit conditions versus constant power at the same means.
  NetworkConfig base = pcn;
  for (auto& type : base.types) type.pc_exponent = 0.0;
  double lambda_plain = derive_intensities(base).lambda_tilde;
  double lambda_pc = c0_pc / (kPi * gamma_fn(1.0 - x));
  result.benefit_interference_cond =
      std::pow(lambda_pc / lambda_plain, 1.0 / x) <=
      moment_gamma1 / (mean_s * moment_gamma) + 1e-12;
  const double c0_plain = kPi * gamma_fn(1.0 - x) * lambda_plain;
  double cond2 = num::semi_infinite_integral(
      [&](double t) {
        double lhs = laplace_signal_hat(base, k, t);
        double rhs = expect_signal_dense(base, k, [&](double v) {
          return std::exp(-t * std::pow(v, 1.0 + gamma_k) / moment_gamma1);
        });
        return std::exp(-c0_plain * std::pow(t / mean_s, x)) * (lhs - rhs) / t;
      },
      capacity_settings(capacity_scale(c0_plain, x, mean_s)));
  result.benefit_signal_cond = cond2 >= -1e-10;
  return result;
}

double ergodic_capacity_simo(const NetworkConfig& net, int k, int rx_antennas) {
  if (rx_antennas < 1) throw DomainError("rx_antennas must be >= 1");
  const auto& type = net.types.at(k);
  if (!type.power.is_constant() || !type.distance.is_constant())
    throw DomainError("SIMO capacity needs constant power and distance");
  const double x = 2.0 / net.alpha;
  const double c0 = sir::interference_exponent(net);
  const double mr = rx_antennas;
  const double mean_s =
      mr * type.power.mean() * std::pow(type.distance.mean(), -net.alpha);
  auto integrand = [&](double t) {
    double kernel = -std::expm1(-mr * std::log1p(t / mr));
    return kernel / t * std::exp(-c0 * std::pow(t / mean_s, x));
  };
  return num::semi_infinite_integral(
             integrand, capacity_settings(capacity_scale(c0, x, mean_s))) /
         kLn2;
}

ThroughputResult throughput_capacity(const NetworkConfig& net,
                                     const ThroughputOptions& options) {
  net.check();
  ThroughputResult result;
  result.per_type.resize(net.K());
  for (int k = 0; k < net.K(); ++k) {
    auto& row = result.per_type[k];
    if (options.pc) {
      row.success = success_prob_pc(net, *options.pc, k, net.theta).value;
      row.capacity = ergodic_capacity_pc(net, *options.pc, k).value;
    } else if (options.cancel) {
      row.success = success_prob_cancel(net, *options.cancel, k, net.theta);
      row.capacity = ergodic_capacity_cancel(net, *options.cancel, k);
    } else {
      row.success = success_prob(net, k, net.theta);
      row.capacity = ergodic_capacity(net, k);
    }
    row.contribution = net.types[k].intensity * row.success * row.capacity;
    result.total += row.contribution;
  }
  return result;
}

ThroughputResult optimize_throughput(const NetworkConfig& net, double theta,
                                     const ThroughputOptions& options) {
  net.check();
  if (!(theta > 0.0)) throw DomainError("requires theta > 0");
  NetworkConfig work = net;
  work.theta = theta;
  const double base_lambda = net.types[0].intensity;
  std::vector<double> ratios;
  for (const auto& type : net.types)
    ratios.push_back(type.intensity / base_lambda);

  int evals = 0;
  auto objective_log = [&](double log_lambda1) {
    double lambda1 = std::pow(10.0, log_lambda1);
    NetworkConfig scaled = work;
    for (int k = 0; k < scaled.K(); ++k)
      scaled.types[k].intensity = ratios[k] * lambda1;
    ++evals;
    return throughput_capacity(scaled, options).total;
  };

  // Coarse bracket over six decades around the configured intensity.
  const double center = std::log10(base_lambda);
  const int grid_n = 25;
  double best_log = center, best_val = -1.0;
  std::vector<double> grid_vals(grid_n);
  for (int i = 0; i < grid_n; ++i) {
    double lg = center - 3.0 + 6.0 * i / (grid_n - 1.0);
    grid_vals[i] = objective_log(lg);
    if (grid_vals[i] > best_val) {
      best_val = grid_vals[i];
      best_log = lg;
    }
  }
  double step = 6.0 / (grid_n - 1.0);
  double argmax_log = golden_section_max(objective_log, best_log - step,
                                         best_log + step, 1e-5, &evals);
  if (evals > 380)
    throw ConvergenceError("optimize_throughput: evaluation budget exhausted",
                           std::pow(10.0, argmax_log));

  double lambda1_star = std::pow(10.0, argmax_log);
  NetworkConfig optimal = work;
  for (int k = 0; k < optimal.K(); ++k)
    optimal.types[k].intensity = ratios[k] * lambda1_star;
  ThroughputResult result = throughput_capacity(optimal, options);
  result.optimizer_evaluations = evals;
  for (int k = 0; k < optimal.K(); ++k)
    result.optimal_lambda.push_back(optimal.types[k].intensity);

  // Closed-form reference values, only defined for exponential unit-mean
  // signals without cancellation or power control.
  bool rayleigh = !options.cancel && !options.pc;
  for (int k = 0; rayleigh && k < net.K(); ++k) {
    SignalProfile profile = signal_profile(net, k);
    rayleigh = profile.kind == SignalProfile::Kind::kGammaShape &&
               std::fabs(profile.shape - 1.0) < 1e-12;
  }
  if (rayleigh) {
    const double x = 2.0 / net.alpha;
    const double gamma_1mx = gamma_fn(1.0 - x);
    double xi = xi_integral(net.alpha, theta);
    double cstar = 0.0;
    for (int k = 0; k < net.K(); ++k) {
      double es_k = mean_signal(net, k);
      double expo = 0.0;
      for (int j = 0; j < net.K(); ++j)
        expo += std::pow(mean_signal(net, j) / es_k, x);
      const auto& type = net.types[k];
      cstar += std::pow(es_k, x) * std::exp(-expo) /
               (type.fading.fractional_moment(x) * type.power.fractional_moment(x));
    }
    result.reference_cstar = xi * cstar / (kPi * kLn2 * gamma_1mx);
    // The printed optimal-intensity formula keeps the integration variable;
    // reported at that variable set to theta, purely as a reference.
    double es_1 = mean_signal(net, 0);
    const auto& t1 = net.types[0];
    result.reference_lambda1_star =
        std::pow(es_1, x) /
        (kPi * gamma_1mx * 2.0 * std::pow(theta, x) *
         t1.fading.fractional_moment(x) * t1.power.fractional_moment(x));
    result.reference_available = true;
  }
  return result;
}

double xi_integral(double alpha, double theta) {
  if (!(alpha > 2.0)) throw DomainError("xi_integral requires alpha > 2");
  if (!(theta > 0.0)) throw DomainError("xi_integral requires theta > 0");
  const double x = 2.0 / alpha;
  const double theta_x = std::pow(theta, x);
  num::QuadratureSettings qs;
  qs.rel_tol = 1e-10;
  qs.max_subdivisions = 4000;
  // The integrand decays only like t^{-1-x}; fold the tail onto (0,1) with
  // t -> 1/u, which turns it into an integrable u^{x-1} endpoint.
  double head = num::integrate(
      [&](double t) { return 1.0 / ((std::pow(t, x) + theta_x) * (1.0 + t)); },
      0.0, 1.0, qs);
  double tail = num::integrate(
      [&](double u) {
        return std::pow(u, x - 1.0) /
               ((1.0 + theta_x * std::pow(u, x)) * (1.0 + u));
      },
      0.0, 1.0, qs);
  return head + tail;
}

}  // namespace hetsir::perf
