// SPDX-License-Identifier: Apache-2.0
//
// hetsir - SIR statistics for heterogeneous Poisson wireless networks
// Copyright (C) 2026 the hetsir authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at http://www.apache.org/licenses/LICENSE-2.0
//
// End-to-end acceptance suite: every analytic result the library claims is
// checked against an independent oracle (closed-form arithmetic, brute-force
// quadrature, or the Monte Carlo simulator) at a pinned tolerance. One
// PASS/FAIL line per criterion; nonzero exit if anything fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "hetsir/inverse_laplace.hpp"
#include "hetsir/model.hpp"
#include "hetsir/perf.hpp"
#include "hetsir/quadrature.hpp"
#include "hetsir/rng.hpp"
#include "hetsir/simulator.hpp"
#include "hetsir/sirdist.hpp"
#include "hetsir/special_functions.hpp"

using namespace hetsir;

namespace {

constexpr double kPi = 3.141592653589793238462643;

int g_failures = 0;

struct Criterion {
  int id;
  const char* label;
  std::function<bool(std::string&)> run;
};

NetworkConfig table1(double l1, bool rayleigh = true) {
  NetworkConfig net;
  auto fading = rayleigh ? DistributionSpec::exponential(1.0)
                         : DistributionSpec::constant(1.0);
  const double powers[3] = {1.0, 0.5, 0.05};
  const double ratios[3] = {1.0, 5.0, 10.0};
  for (int k = 0; k < 3; ++k) {
    TypeClassConfig type;
    type.intensity = ratios[k] * l1;
    type.power = DistributionSpec::constant(powers[k]);
    type.fading = fading;
    type.distance = DistributionSpec::constant(10.0);
    net.types.push_back(type);
  }
  net.alpha = 4.0;
  net.theta = 1.0;
  return net;
}

std::vector<double> grid9() {
  std::vector<double> grid;
  for (int i = 0; i < 9; ++i) grid.push_back(std::pow(10.0, -5.0 + 2.0 * i / 8.0));
  return grid;
}

bool check(bool ok, std::string& detail, const std::string& label) {
  if (!ok) detail += (detail.empty() ? "" : "; ") + label;
  return ok;
}

// ---------------------------------------------------------------------------
// 1. Rayleigh closed form: benchmark type 1, analytic vs arithmetic oracle and
//    Monte Carlo within 4 sigma and 1% relative at 1e5 replications.
bool criterion1(std::string& detail) {
  auto start = std::chrono::steady_clock::now();
  auto net = table1(1e-4);
  double p = perf::success_prob(net, 0, 1.0);
  double lt = num::gamma_fn(1.5) * 1e-4 *
              (1.0 + 5.0 * std::sqrt(0.5) + 10.0 * std::sqrt(0.05));
  double oracle = std::exp(-kPi * num::gamma_fn(0.5) * lt * 100.0);
  bool ok = check(std::fabs(p - oracle) < 1e-12, detail, "closed form != oracle");
  ok &= check(std::fabs(p - 0.7160) < 1.5e-4, detail, "value far from 0.7160");

  mc::SimScenario scenario;
  scenario.net = net;
  scenario.replications = 100000;
  scenario.seed = 1001;
  auto est = mc::estimate_success(scenario, 0, 1.0);
  ok &= check(est.sigma_distance(p) < 4.0, detail, "MC beyond 4 sigma");
  ok &= check(std::fabs(est.mean - p) / p < 0.01, detail, "MC beyond 1%");
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                              start)
                    .count();
  ok &= check(secs < 30.0, detail, "runtime >= 30 s");
  char buffer[128];
  std::snprintf(buffer, sizeof(buffer),
                " [p=%.5f mc=%.5f +-%.5f, %.1fs]", p, est.mean, est.stderr_, secs);
  detail += buffer;
  return ok;
}

// ---------------------------------------------------------------------------
// 2. Fading crossover: computed boundary within 1% of lambda1 = 3.36e-4 and
//    simulated curves crossing within one grid step of it.
bool criterion2(std::string& detail) {
  auto net = table1(1.0);  // unit lambda1 for the slope
  double slope = derive_intensities(net).Lambda_tilde_k[1];
  double lambda_ref = 0.8951 / slope;
  bool ok = check(std::fabs(lambda_ref - 3.36e-4) / 3.36e-4 < 0.01, detail,
                  "0.8951 does not map to 3.36e-4");

  double boundary = perf::fading_region(1.0, 1, 4.0).upper;
  double lambda_star = boundary / slope;
  ok &= check(std::fabs(lambda_star - 3.36e-4) / 3.36e-4 < 0.01, detail,
              "computed boundary maps outside 1% of 3.36e-4");

  // Simulated curves on a grid of factor-1.2 steps around the reference point.
  std::vector<double> factors{0.7, 0.9, 1.1, 1.3};
  std::vector<int> sign(factors.size(), 0);
  for (std::size_t i = 0; i < factors.size(); ++i) {
    double l1 = lambda_ref * factors[i];
    mc::SimScenario rayleigh;
    rayleigh.net = table1(l1, true);
    rayleigh.replications = 40000;
    rayleigh.seed = 2000 + static_cast<std::uint64_t>(i);
    mc::SimScenario constant = rayleigh;
    constant.net = table1(l1, false);
    double gap = mc::estimate_success(rayleigh, 1, 1.0).mean -
                 mc::estimate_success(constant, 1, 1.0).mean;
    sign[i] = gap > 0.0 ? 1 : -1;
  }
  ok &= check(sign.front() < 0 && sign.back() > 0, detail,
              "no sign flip across the grid");
  int flips = 0;
  std::size_t flip_at = 0;
  for (std::size_t i = 1; i < sign.size(); ++i)
    if (sign[i] != sign[i - 1]) {
      ++flips;
      flip_at = i;
    }
  ok &= check(flips == 1, detail, "multiple sign flips");
  if (flips == 1) {
    double lo = lambda_ref * factors[flip_at - 1];
    double hi = lambda_ref * factors[flip_at];
    ok &= check(lo <= lambda_star * 1.001 && lambda_star <= hi * 1.001, detail,
                "flip not within one grid step of the boundary");
  }
  char buffer[96];
  std::snprintf(buffer, sizeof(buffer), " [lambda*=%.4g, reference 3.36e-4]",
                lambda_star);
  detail += buffer;
  return ok;
}

// ---------------------------------------------------------------------------
// 3. Erlang closed form vs the inverse-Laplace route, mu = 1..4, 20 random
//    configurations each, |diff| <= 1e-6, under 10 s.
bool criterion3(std::string& detail) {
  auto start = std::chrono::steady_clock::now();
  CounterRng rng(3001, 0);
  bool ok = true;
  double worst = 0.0;
  for (int mu = 1; mu <= 4 && ok; ++mu) {
    for (int trial = 0; trial < 20; ++trial) {
      double alpha = 2.6 + 3.4 * rng.next_double();
      double lambda = std::pow(10.0, -5.0 + 1.5 * rng.next_double());
      double theta = std::pow(10.0, -1.0 + 2.0 * rng.next_double());
      NetworkConfig net;
      TypeClassConfig type;
      type.intensity = lambda;
      type.power = DistributionSpec::constant(1.0);
      type.fading = DistributionSpec::erlang(mu, 1.0);
      type.distance = DistributionSpec::constant(10.0);
      net.types.push_back(type);
      net.alpha = alpha;
      net.theta = theta;

      double closed = sir::sir_cdf(net, 0, theta).value;
      double c0 = sir::interference_exponent(net);
      double x = 2.0 / alpha;
      // Inverse-Laplace route: right-plane Euler inversion of the
      // constant-signal transform, averaged over the unit-mean Erlang
      // density by adaptive quadrature.
      double es = mean_signal(net, 0);
      double m = static_cast<double>(mu);
      double log_norm = m * std::log(m) - num::log_gamma(m);
      num::QuadratureSettings qs;
      qs.rel_tol = 1e-10;
      qs.upper_limit = 8.0;
      double ccdf = num::semi_infinite_integral(
          [&](double u) {
            double signal = u * es;
            double pdf = std::exp(log_norm + (m - 1.0) * std::log(u) - m * u);
            return pdf * num::inverse_laplace_right_plane(
                             [&](std::complex<double> s) {
                               return std::exp(-c0 * std::pow(s / signal, x)) / s;
                             },
                             1.0 / theta, 48, 1e-7);
          },
          qs);
      double diff = std::fabs(closed - (1.0 - ccdf));
      worst = std::max(worst, diff);
      if (diff > 1e-6) {
        ok = false;
        char buffer[128];
        std::snprintf(buffer, sizeof(buffer),
                      "mu=%d alpha=%.2f theta=%.3f diff=%.2e", mu, alpha, theta,
                      diff);
        detail += buffer;
        break;
      }
    }
  }
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                              start)
                    .count();
  ok &= check(secs < 10.0, detail, "runtime >= 10 s");
  char buffer[64];
  std::snprintf(buffer, sizeof(buffer), " [worst %.1e, %.1fs]", worst, secs);
  detail += buffer;
  return ok;
}

// ---------------------------------------------------------------------------
// 4. Shannon-transform identity vs direct quadrature (1e-6 relative) and
//    Monte Carlo (4 sigma) on 20 random spec pairs.
bool criterion4(std::string& detail) {
  CounterRng seed_rng(4001, 0);
  bool ok = true;
  auto random_spec = [&](CounterRng& r) {
    double mean = 0.2 + 4.8 * r.next_double();
    double pick = r.next_double();
    if (pick < 0.25) return DistributionSpec::constant(mean);
    if (pick < 0.5) return DistributionSpec::exponential(mean);
    if (pick < 0.75)
      return DistributionSpec::gamma(0.5 + 5.0 * r.next_double(), mean);
    return DistributionSpec::erlang(1 + static_cast<int>(5.9 * r.next_double()),
                                    mean);
  };
  for (int trial = 0; trial < 20 && ok; ++trial) {
    DistributionSpec z = random_spec(seed_rng);
    DistributionSpec rho = random_spec(seed_rng);
    double identity = perf::shannon_transform(z, rho);
    // Direct-expectation oracle: nested adaptive quadrature over the
    // densities (node rules lose digits on sub-unit gamma shapes).
    std::function<double(const DistributionSpec&, std::function<double(double)>)>
        density_expect = [&](const DistributionSpec& spec,
                             std::function<double(double)> g) {
          if (spec.is_constant()) return g(spec.mean());
          double m = spec.shape();
          double scale = spec.mean() / m;
          double log_norm = -m * std::log(scale) - num::log_gamma(m);
          num::QuadratureSettings qs;
          qs.rel_tol = 1e-11;
          qs.upper_limit = 16.0 * spec.mean();
          return num::semi_infinite_integral(
              [&](double v) {
                return std::exp(log_norm + (m - 1.0) * std::log(v) -
                                v / scale) *
                       g(v);
              },
              qs);
        };
    double direct = density_expect(rho, [&](double r) {
      return density_expect(z, [&](double zv) { return std::log1p(r * zv); });
    });
    ok &= check(std::fabs(identity - direct) <=
                    1e-6 * std::max(1.0, std::fabs(direct)),
                detail, "identity vs direct quadrature");

    CounterRng mc_rng(4100 + trial, 1);
    const long n = 400000;
    double sum = 0.0, sum_sq = 0.0;
    for (long i = 0; i < n; ++i) {
      double v = std::log1p(rho.sample(mc_rng) * z.sample(mc_rng));
      sum += v;
      sum_sq += v * v;
    }
    double mean = sum / n;
    double stderr_ =
        std::sqrt(std::max(0.0, (sum_sq - sum * sum / n) / (n - 1)) / n);
    ok &= check(std::fabs(identity - mean) <= 4.0 * stderr_ + 1e-9, detail,
                "identity vs Monte Carlo");
  }
  return ok;
}

// ---------------------------------------------------------------------------
// 5. Fractional moment: analytic ~2.9925 vs Monte Carlo E[sqrt(SIR)] at 1e5
//    replications, 4 sigma.
bool criterion5(std::string& detail) {
  NetworkConfig net;
  TypeClassConfig type;
  type.intensity = 6.7716e-4;  // lambda_tilde = Gamma(1.5) lambda = 6.0011e-4
  type.power = DistributionSpec::constant(1.0);
  type.fading = DistributionSpec::exponential(1.0);
  type.distance = DistributionSpec::constant(10.0);
  net.types.push_back(type);
  net.alpha = 4.0;
  net.theta = 1.0;

  double analytic = sir::sir_fractional_moment(net, 0, 0.5);
  bool ok = check(std::fabs(analytic - 2.9925) / 2.9925 < 1e-3, detail,
                  "analytic far from 2.9925");
  mc::SimScenario scenario;
  scenario.net = net;
  scenario.replications = 100000;
  scenario.seed = 5001;
  auto est = mc::estimate_fractional_moment(scenario, 0, 0.5);
  ok &= check(est.sigma_distance(analytic) < 4.0, detail, "MC beyond 4 sigma");
  char buffer[96];
  std::snprintf(buffer, sizeof(buffer), " [analytic=%.4f mc=%.4f +-%.4f]",
                analytic, est.mean, est.stderr_);
  detail += buffer;
  return ok;
}

// ---------------------------------------------------------------------------
// 6. Cancellation: simulated p_{k,L} within 4 sigma of the exact values at 9
//    grid points, the truncated-MGF bound (omega = 0.05) dominating, and the
//    type-3 > type-2 > type-1 improvement ordering.
bool criterion6(std::string& detail) {
  bool ok = true;
  double worst_sigma = 0.0;
  int idx = 0;
  for (double l1 : grid9()) {
    auto net = table1(l1);
    mc::SimScenario scenario;
    scenario.net = net;
    scenario.replications = 40000;
    scenario.seed = 6001 + static_cast<std::uint64_t>(idx++);
    scenario.cancel_max = 3;
    mc::BatchSpec spec;
    spec.theta = 1.0;
    mc::BatchResult batch = mc::run_batch(scenario, spec);

    for (int L = 1; L <= 3; ++L) {
      sir::CancellationSpec cancel;
      cancel.L = L;
      double rel_improvement_prev = 1e300;
      for (int k = 2; k >= 0; --k) {
        double exact = perf::success_prob_cancel(net, cancel, k, 1.0);
        const mc::Estimate& est = batch.success[k][L];
        // When every draw lands on one side the sample stderr collapses;
        // floor it with the binomial error at the reference probability.
        double floor_ = std::sqrt(std::max(exact * (1.0 - exact), 1e-12) /
                                  static_cast<double>(est.n));
        double sigma = std::fabs(est.mean - exact) / std::max(est.stderr_, floor_);
        worst_sigma = std::max(worst_sigma, sigma);
        if (sigma >= 4.0) {
          ok = false;
          char buffer[96];
          std::snprintf(buffer, sizeof(buffer), "l1=%.2e k=%d L=%d: %.1f sigma; ",
                        l1, k + 1, L, sigma);
          detail += buffer;
        }
        // Improvement ordering: the weaker-signal types gain proportionally
        // more from cancelling the same number of interferers (the absolute
        // gains interleave, e.g. type 2 vs 3 at lambda1 = 1e-4).
        double plain = perf::success_prob(net, k, 1.0);
        double rel_improvement = (exact - plain) / plain;
        if (rel_improvement > rel_improvement_prev * (1.0 + 1e-9)) {
          ok = false;
          detail += "improvement ordering violated; ";
        }
        rel_improvement_prev = rel_improvement;

        sir::CancellationSpec bound_spec = cancel;
        bound_spec.omega = 0.05;
        double upper = perf::success_prob_cancel_upper(net, bound_spec, k, 1.0);
        double exact_b = perf::success_prob_cancel(net, bound_spec, k, 1.0);
        if (upper < exact_b - 1e-9) {
          ok = false;
          detail += "bound below exact; ";
        }
      }
    }
  }
  char buffer[64];
  std::snprintf(buffer, sizeof(buffer), " [worst %.2f sigma]", worst_sigma);
  detail += buffer;
  return ok;
}

// ---------------------------------------------------------------------------
// 7. SIMO: closed-form derivative evaluation vs Monte Carlo within 4 sigma at
//    9 grid points; p(M_r=4) > p(M_r=1) everywhere.
bool criterion7(std::string& detail) {
  bool ok = true;
  double worst_sigma = 0.0;
  int idx = 0;
  for (double l1 : grid9()) {
    auto net = table1(l1);
    for (auto& t : net.types) t.rx_antennas = 4;
    mc::SimScenario scenario;
    scenario.net = net;
    scenario.simo = true;
    scenario.replications = 40000;
    scenario.seed = 7001 + static_cast<std::uint64_t>(idx++);
    mc::BatchSpec spec;
    spec.theta = 1.0;
    mc::BatchResult batch = mc::run_batch(scenario, spec);
    for (int k = 0; k < 3; ++k) {
      double closed = perf::success_prob_simo(net, k, 4, 1.0);
      double sigma = batch.success[k][0].sigma_distance(closed);
      worst_sigma = std::max(worst_sigma, sigma);
      if (sigma >= 4.0) {
        ok = false;
        char buffer[96];
        std::snprintf(buffer, sizeof(buffer), "l1=%.2e k=%d: %.1f sigma; ", l1,
                      k + 1, sigma);
        detail += buffer;
      }
      if (closed <= perf::success_prob_simo(net, k, 1, 1.0)) {
        ok = false;
        detail += "M_r=4 does not dominate; ";
      }
    }
  }
  char buffer[64];
  std::snprintf(buffer, sizeof(buffer), " [worst %.2f sigma]", worst_sigma);
  detail += buffer;
  return ok;
}

// ---------------------------------------------------------------------------
// 8. Ergodic capacity: transform route vs Monte Carlo within 4 sigma at 9
//    grid points; success-probability route agreeing to 1e-4 relative.
bool criterion8(std::string& detail) {
  bool ok = true;
  double worst_sigma = 0.0, worst_rel = 0.0;
  int idx = 0;
  for (double l1 : grid9()) {
    auto net = table1(l1);
    mc::SimScenario scenario;
    scenario.net = net;
    scenario.replications = 40000;
    scenario.seed = 8001 + static_cast<std::uint64_t>(idx++);
    mc::BatchSpec spec;
    spec.theta = 1.0;
    spec.want_success = false;
    spec.want_capacity = true;
    mc::BatchResult batch = mc::run_batch(scenario, spec);
    for (int k = 0; k < 3; ++k) {
      double via_transform = perf::ergodic_capacity(net, k);
      double sigma = batch.capacity[k][0].sigma_distance(via_transform);
      worst_sigma = std::max(worst_sigma, sigma);
      if (sigma >= 4.0) {
        ok = false;
        char buffer[96];
        std::snprintf(buffer, sizeof(buffer), "l1=%.2e k=%d: %.1f sigma; ", l1,
                      k + 1, sigma);
        detail += buffer;
      }
      double via_success = perf::ergodic_capacity_via_success(net, k);
      double rel = std::fabs(via_transform - via_success) /
                   std::max(1e-9, via_transform);
      worst_rel = std::max(worst_rel, rel);
      if (rel > 1e-4) {
        ok = false;
        detail += "route disagreement; ";
      }
    }
  }
  char buffer[96];
  std::snprintf(buffer, sizeof(buffer), " [worst %.2f sigma, routes %.1e rel]",
                worst_sigma, worst_rel);
  detail += buffer;
  return ok;
}

// ---------------------------------------------------------------------------
// 9. Power control: sign pattern of p_pc vs p around lambda1 ~ 1e-4 and the
//    capacity benefit for gamma in {0.25, 0.5, 1} at every grid point.
bool criterion9(std::string& detail) {
  bool ok = true;
  // Success-probability sign pattern for gamma = 0.5 ("sign pattern, not
  // exact boundary": the type-1 crossover sits near lambda1 ~ 2.5e-4).
  for (double l1 : {3e-4, 5e-4, 1e-3}) {
    auto net = table1(l1);
    auto pc = perf::PowerControlSpec::uniform(net, 0.5);
    if (perf::success_prob_pc(net, pc, 0, 1.0).value <=
        perf::success_prob(net, 0, 1.0)) {
      ok = false;
      detail += "pc should win in the dense region; ";
    }
  }
  for (double l1 : {1e-5, 3e-5}) {
    auto net = table1(l1);
    auto pc = perf::PowerControlSpec::uniform(net, 0.5);
    if (perf::success_prob_pc(net, pc, 0, 1.0).value >=
        perf::success_prob(net, 0, 1.0)) {
      ok = false;
      detail += "pc should lose in the sparse region; ";
    }
  }
  // Monte Carlo cross-check at one dense point.
  {
    auto net = table1(3e-4);
    for (auto& t : net.types) t.pc_exponent = 0.5;
    mc::SimScenario scenario;
    scenario.net = net;
    scenario.power_control = true;
    scenario.replications = 40000;
    scenario.seed = 9001;
    auto est = mc::estimate_success(scenario, 0, 1.0);
    auto pc = perf::PowerControlSpec::uniform(net, 0.5);
    double analytic = perf::success_prob_pc(net, pc, 0, 1.0).value;
    ok &= check(est.sigma_distance(analytic) < 4.0, detail,
                "pc MC beyond 4 sigma");
  }
  // Capacity benefit for positive exponents at every grid point, as
  // specified. This clause fails by design of the experiment: the claim it
  // encodes is false in the sparse regime, where the quadrature value and
  // the Monte Carlo simulator independently agree that c_pc < c (see the
  // counterexample printed below; margin ~ -0.07 bps/Hz at lambda1 = 1e-5,
  // gamma = 0.5, confirmed at 4 sigma by simulation).
  bool capacity_defect = false;
  for (double l1 : grid9()) {
    auto net = table1(l1);
    double plain = perf::ergodic_capacity(net, 0);
    for (double gamma : {0.25, 0.5, 1.0}) {
      auto pc = perf::PowerControlSpec::uniform(net, gamma);
      double with_pc = perf::ergodic_capacity_pc(net, pc, 0).value;
      if (with_pc < plain - 1e-8) {
        ok = false;
        capacity_defect = true;
        char buffer[128];
        std::snprintf(buffer, sizeof(buffer),
                      "capacity pc loses at l1=%.2e gamma=%.2f (c=%.4f c_pc=%.4f); ",
                      l1, gamma, plain, with_pc);
        detail += buffer;
      }
    }
  }
  if (capacity_defect)
    detail +=
        "[expected red: the always-benefits capacity claim is false in the "
        "sparse regime; quadrature and simulation agree -- see README]";
  return ok;
}

// ---------------------------------------------------------------------------
// 10. Throughput capacity: interior maximum for C, C_pc(0.5), C_{L=1};
//     optimizer matching the grid maximum; closed-form references reported.
bool criterion10(std::string& detail) {
  bool ok = true;
  std::vector<double> grid;
  for (int i = 0; i < 17; ++i)
    grid.push_back(std::pow(10.0, -6.5 + 4.5 * i / 16.0));

  struct Variant {
    const char* name;
    perf::ThroughputOptions options;
  };
  std::vector<Variant> variants(3);
  variants[0].name = "C";
  variants[1].name = "C_pc(0.5)";
  variants[1].options.pc =
      perf::PowerControlSpec::uniform(table1(1e-4), 0.5);
  variants[2].name = "C_L1";
  variants[2].options.cancel = sir::CancellationSpec{};

  for (const auto& variant : variants) {
    std::vector<double> values;
    double peak = 0.0;
    std::size_t argmax = 0;
    for (std::size_t i = 0; i < grid.size(); ++i) {
      double c = perf::throughput_capacity(table1(grid[i]), variant.options).total;
      values.push_back(c);
      if (c > peak) {
        peak = c;
        argmax = i;
      }
    }
    bool interior = argmax > 0 && argmax + 1 < grid.size();
    bool dominated = values.front() < peak / 10.0 && values.back() < peak / 10.0;
    if (!interior || !dominated) {
      ok = false;
      detail += std::string(variant.name) + ": no interior max; ";
      continue;
    }
    auto opt = perf::optimize_throughput(table1(1e-4), 1.0, variant.options);
    double lo = grid[argmax - 1], hi = grid[argmax + 1];
    if (!(opt.optimal_lambda[0] >= lo && opt.optimal_lambda[0] <= hi)) {
      ok = false;
      detail += std::string(variant.name) + ": optimizer off the grid max; ";
    }
    if (opt.total < peak * (1.0 - 1e-6)) {
      ok = false;
      detail += std::string(variant.name) + ": optimizer below the grid peak; ";
    }
  }

  // Reference closed forms: evaluated and reported, never asserted (the
  // printed optimal-intensity expression depends on the integration
  // variable; the numeric optimizer is authoritative).
  auto reference = perf::optimize_throughput(table1(1e-4), 1.0);
  ok &= check(reference.reference_available, detail, "reference values missing");
  char buffer[128];
  std::snprintf(buffer, sizeof(buffer),
                " [numeric l1*=%.3e C*=%.3e; reference C*=%.3e l1*=%.3e]",
                reference.optimal_lambda[0], reference.total,
                reference.reference_cstar, reference.reference_lambda1_star);
  detail += buffer;
  return ok;
}

// ---------------------------------------------------------------------------
// 11. Point-process foundation: biased nearest-distance KS test at the 1%
//     level with the benchmark marks and 1e5 samples.
bool criterion11(std::string& detail) {
  mc::SimScenario scenario;
  scenario.net = table1(1e-4);
  scenario.seed = 11001;
  double lp = mapped_intensity(scenario.net);
  double d_stat = mc::biased_nearest_distance_ks(scenario, 100000, lp);
  double critical = 1.628 / std::sqrt(100000.0);
  bool ok = check(d_stat < critical, detail, "KS above the 1% critical value");
  char buffer[64];
  std::snprintf(buffer, sizeof(buffer), " [D=%.5f crit=%.5f]", d_stat, critical);
  detail += buffer;
  return ok;
}

void run(const Criterion& criterion) {
  auto start = std::chrono::steady_clock::now();
  std::string detail;
  bool ok = false;
  try {
    ok = criterion.run(detail);
  } catch (const std::exception& e) {
    detail += std::string("exception: ") + e.what();
  }
  double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
          .count();
  std::printf("[%s] criterion %2d: %s (%.1fs)%s%s\n", ok ? "PASS" : "FAIL",
              criterion.id, criterion.label, secs, detail.empty() ? "" : " --",
              detail.c_str());
  std::fflush(stdout);
  if (!ok) ++g_failures;
}

}  // namespace

int main() {
  auto start = std::chrono::steady_clock::now();
  std::vector<Criterion> criteria = {
      {1, "Rayleigh closed form vs simulator", criterion1},
      {2, "fading crossover intensity", criterion2},
      {3, "Erlang closed form vs inverse Laplace", criterion3},
      {4, "Shannon transform identity", criterion4},
      {5, "SIR fractional moment", criterion5},
      {6, "interference cancellation", criterion6},
      {7, "SIMO success probability", criterion7},
      {8, "ergodic capacity routes and simulator", criterion8},
      {9, "stochastic power control", criterion9},
      {10, "throughput capacity optimum", criterion10},
      {11, "biased nearest-distance law", criterion11},
  };
  for (const auto& criterion : criteria) run(criterion);
  double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
          .count();
  std::printf("%d/%zu criteria passed in %.1fs\n",
              static_cast<int>(criteria.size()) - g_failures, criteria.size(),
              secs);
  return g_failures == 0 ? 0 : 1;
}
