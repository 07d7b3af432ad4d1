// SPDX-License-Identifier: Apache-2.0
//
// hetsir - SIR statistics for heterogeneous Poisson wireless networks
// Copyright (C) 2026 the hetsir authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at http://www.apache.org/licenses/LICENSE-2.0

#include "hetsir/simulator.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

#include "hetsir/errors.hpp"
#include "hetsir/parallel.hpp"

namespace hetsir::mc {

namespace {

constexpr double kPi = 3.141592653589793238462643;
constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr std::int64_t kChunk = 256;

/// Per-run constants derived from the scenario once.
struct RunContext {
  double window_radius;
  double window_radius_sq;
  double half_alpha;
  bool alpha_is_four;
  std::vector<double> expected_counts;  // lambda_k pi R^2
  // Power-control normalizations E[H^gamma] E[R^{-alpha gamma}] per type.
  std::vector<double> pc_norm;
};

RunContext make_context(const SimScenario& scenario) {
  scenario.validate();
  const NetworkConfig& net = scenario.net;
  RunContext ctx;
  ctx.window_radius = scenario.window_radius > 0.0
                          ? scenario.window_radius
                          : auto_window_radius(net, scenario.tail_tolerance);
  ctx.window_radius_sq = ctx.window_radius * ctx.window_radius;
  ctx.half_alpha = net.alpha / 2.0;
  ctx.alpha_is_four = net.alpha == 4.0;
  for (const auto& type : net.types) {
    ctx.expected_counts.push_back(type.intensity * kPi * ctx.window_radius_sq);
    if (scenario.power_control && type.pc_exponent != 0.0) {
      double g = type.pc_exponent;
      ctx.pc_norm.push_back(type.fading.fractional_moment(g) *
                            type.distance.fractional_moment(-net.alpha * g));
    } else {
      ctx.pc_norm.push_back(1.0);
    }
  }
  return ctx;
}

inline double pathloss(const RunContext& ctx, double r2) {
  return ctx.alpha_is_four ? 1.0 / (r2 * r2) : std::pow(r2, -ctx.half_alpha);
}

/// Transmit power of one node under the scenario's power policy.
inline double draw_power(const SimScenario& scenario, const RunContext& ctx,
                         int type_index, CounterRng& rng) {
  const auto& type = scenario.net.types[type_index];
  if (!scenario.power_control || type.pc_exponent == 0.0)
    return type.power.sample(rng);
  // The power reacts to the node's own link, which is independent of its
  // channel toward the typical receiver.
  double h_own = type.fading.sample(rng);
  double r_own = type.distance.sample(rng);
  double own_gain = h_own * std::pow(r_own, -scenario.net.alpha);
  return type.power.mean() * std::pow(own_gain, type.pc_exponent) /
         ctx.pc_norm[type_index];
}

/// Received signal power of the typical type-k pair under the options.
inline double draw_signal(const SimScenario& scenario, const RunContext& ctx,
                          int k, CounterRng& rng) {
  const auto& type = scenario.net.types[k];
  if (scenario.power_control && type.pc_exponent != 0.0) {
    double h_own = type.fading.sample(rng);
    double r_own = type.distance.sample(rng);
    double own_gain = h_own * std::pow(r_own, -scenario.net.alpha);
    double p = type.power.mean() * std::pow(own_gain, type.pc_exponent) /
               ctx.pc_norm[k];
    return p * own_gain;
  }
  if (scenario.simo && type.rx_antennas > 1) {
    // Receive beamforming: the gain is a sum of M_r unit-mean exponentials.
    double g = 0.0;
    for (int a = 0; a < type.rx_antennas; ++a) g += rng.next_exponential();
    double p = type.power.sample(rng);
    double r = type.distance.sample(rng);
    return p * g * std::pow(r, -scenario.net.alpha);
  }
  double p = type.power.sample(rng);
  double h = type.fading.sample(rng);
  double r = type.distance.sample(rng);
  return p * h * std::pow(r, -scenario.net.alpha);
}

/// Interference of one realization: residual[L] is the sum of all terms with
/// the L strongest removed, L = 0..cancel_max. Residuals are pure sums of
/// the surviving terms, never total-minus-strongest differences.
struct DrawnInterference {
  std::vector<double> residual;
  int term_count = 0;
};

void draw_interference(const SimScenario& scenario, const RunContext& ctx,
                       CounterRng& rng, std::vector<double>& terms,
                       DrawnInterference& out) {
  terms.clear();
  const NetworkConfig& net = scenario.net;
  for (int j = 0; j < net.K(); ++j) {
    long count = rng.next_poisson(ctx.expected_counts[j]);
    for (long i = 0; i < count; ++i) {
      double r2 = rng.next_double_open() * ctx.window_radius_sq;
      double gain = net.types[j].fading.sample(rng);
      double power = draw_power(scenario, ctx, j, rng);
      terms.push_back(power * gain * pathloss(ctx, r2));
    }
  }
  const int lmax = scenario.cancel_max;
  out.term_count = static_cast<int>(terms.size());
  out.residual.assign(lmax + 1, 0.0);
  if (lmax == 0) {
    double total = 0.0;
    for (double t : terms) total += t;
    out.residual[0] = total;
    return;
  }
  const int top = std::min<int>(lmax, out.term_count);
  std::partial_sort(terms.begin(), terms.begin() + top, terms.end(),
                    std::greater<double>());
  double acc = 0.0;
  for (std::size_t i = top; i < terms.size(); ++i) acc += terms[i];
  for (int L = top; L >= 0; --L) {
    out.residual[L] = acc;
    if (L > 0) acc += terms[L - 1];
  }
}

struct Moments {
  double sum = 0.0;
  double sum_sq = 0.0;
  long n = 0;

  void add(double v) {
    sum += v;
    sum_sq += v * v;
    ++n;
  }
  void merge(const Moments& o) {
    sum += o.sum;
    sum_sq += o.sum_sq;
    n += o.n;
  }
};

Estimate to_estimate(const Moments& m, std::uint64_t seed) {
  Estimate e;
  e.n = m.n;
  e.seed = seed;
  if (m.n == 0) return e;
  e.mean = m.sum / m.n;
  if (m.n > 1) {
    double var = (m.sum_sq - m.sum * m.sum / m.n) / (m.n - 1);
    e.stderr_ = std::sqrt(std::max(0.0, var) / m.n);
  }
  return e;
}

struct BatchAccum {
  std::vector<Moments> success;     // [k*(Lmax+1)+L]
  std::vector<Moments> capacity;    // idem, sentinel draws excluded
  std::vector<Moments> fractional;  // idem
  std::vector<Moments> laplace;     // [s*(Lmax+1)+L]
  std::vector<Moments> cdf;         // [k*T + t], at L = cancel_max
  long infinite_draws = 0;
  bool used = false;

  void merge(const BatchAccum& o) {
    auto merge_vec = [](std::vector<Moments>& a, const std::vector<Moments>& b) {
      for (std::size_t i = 0; i < a.size(); ++i) a[i].merge(b[i]);
    };
    merge_vec(success, o.success);
    merge_vec(capacity, o.capacity);
    merge_vec(fractional, o.fractional);
    merge_vec(laplace, o.laplace);
    merge_vec(cdf, o.cdf);
    infinite_draws += o.infinite_draws;
  }
};

}  // namespace

void SimScenario::validate() const {
  net.check();
  if (replications < 1) throw DomainError("SimScenario: replications >= 1");
  if (window_radius < 0.0) throw DomainError("SimScenario: window_radius >= 0");
  if (!(tail_tolerance > 0.0 && tail_tolerance < 0.5))
    throw DomainError("SimScenario: tail_tolerance in (0, 0.5)");
  if (cancel_max < 0) throw DomainError("SimScenario: cancel_max >= 0");
}

double auto_window_radius(const NetworkConfig& net, double tail_tolerance) {
  net.check();
  if (!(tail_tolerance > 0.0 && tail_tolerance < 0.5))
    throw DomainError("auto_window_radius: tail_tolerance in (0, 0.5)");
  // Expected out-of-window interference 2 pi M R^{2-a}/(a-2) equals
  // tail_tolerance times the same expression at the mean nearest-interferer
  // scale r0, so R = r0 delta^{-1/(a-2)} independent of the mark masses.
  double total_intensity = 0.0;
  for (const auto& type : net.types) total_intensity += type.intensity;
  double r0 = 1.0 / std::sqrt(kPi * total_intensity);
  return r0 * std::pow(tail_tolerance, -1.0 / (net.alpha - 2.0));
}

Realization sample_network(const SimScenario& scenario, CounterRng& rng) {
  RunContext ctx = make_context(scenario);
  Realization real;
  real.per_type.resize(scenario.net.K());
  for (int j = 0; j < scenario.net.K(); ++j) {
    long count = rng.next_poisson(ctx.expected_counts[j]);
    real.per_type[j].reserve(count);
    for (long i = 0; i < count; ++i) {
      PointSample p;
      p.distance_sq = rng.next_double_open() * ctx.window_radius_sq;
      p.gain = scenario.net.types[j].fading.sample(rng);
      p.power = draw_power(scenario, ctx, j, rng);
      real.per_type[j].push_back(p);
    }
  }
  return real;
}

double sir_sample(const SimScenario& scenario, int k, CounterRng& rng) {
  if (k < 0 || k >= scenario.net.K())
    throw DomainError("type index out of range");
  RunContext ctx = make_context(scenario);
  std::vector<double> terms;
  DrawnInterference drawn;
  draw_interference(scenario, ctx, rng, terms, drawn);
  std::vector<double> signals(scenario.net.K());
  for (int j = 0; j < scenario.net.K(); ++j)
    signals[j] = draw_signal(scenario, ctx, j, rng);
  if (drawn.term_count <= scenario.cancel_max) return kInf;
  double interference = drawn.residual[scenario.cancel_max];
  return interference > 0.0 ? signals[k] / interference : kInf;
}

BatchResult run_batch(const SimScenario& scenario, const BatchSpec& spec) {
  RunContext ctx = make_context(scenario);
  const int K = scenario.net.K();
  const int lcount = scenario.cancel_max + 1;
  const int n_s = static_cast<int>(spec.laplace_s.size());
  const int n_t = static_cast<int>(spec.cdf_thetas.size());

  const std::int64_t n = scenario.replications;
  const std::int64_t chunks = chunk_count(n, kChunk);
  std::vector<BatchAccum> accums(chunks);

  parallel_chunks(
      n, kChunk,
      [&](std::int64_t chunk, std::int64_t begin, std::int64_t end) {
        BatchAccum& acc = accums[chunk];
        acc.used = true;
        acc.success.resize(K * lcount);
        acc.capacity.resize(K * lcount);
        acc.fractional.resize(K * lcount);
        acc.laplace.resize(n_s * lcount);
        acc.cdf.resize(K * n_t);
        std::vector<double> terms;
        terms.reserve(1024);
        DrawnInterference drawn;
        std::vector<double> signals(K);

        for (std::int64_t rep = begin; rep < end; ++rep) {
          CounterRng rng(scenario.seed, static_cast<std::uint64_t>(rep));
          draw_interference(scenario, ctx, rng, terms, drawn);
          for (int j = 0; j < K; ++j)
            signals[j] = draw_signal(scenario, ctx, j, rng);

          for (int s_idx = 0; s_idx < n_s; ++s_idx)
            for (int L = 0; L < lcount; ++L) {
              double value =
                  drawn.term_count <= L
                      ? 1.0
                      : std::exp(-spec.laplace_s[s_idx] * drawn.residual[L]);
              acc.laplace[s_idx * lcount + L].add(value);
            }

          for (int k = 0; k < K; ++k) {
            for (int L = 0; L < lcount; ++L) {
              double sir;
              if (drawn.term_count <= L || drawn.residual[L] <= 0.0) {
                sir = kInf;
              } else {
                sir = signals[k] / drawn.residual[L];
              }
              if (std::isinf(sir)) ++acc.infinite_draws;
              if (spec.want_success)
                acc.success[k * lcount + L].add(sir > spec.theta ? 1.0 : 0.0);
              if (spec.want_capacity && !std::isinf(sir))
                acc.capacity[k * lcount + L].add(std::log2(1.0 + sir));
              if (spec.fractional_delta > 0.0 && !std::isinf(sir))
                acc.fractional[k * lcount + L].add(
                    std::pow(sir, spec.fractional_delta));
            }
            if (n_t > 0) {
              int level = std::min(scenario.cancel_max, drawn.term_count);
              double sir = drawn.term_count <= scenario.cancel_max
                               ? kInf
                               : signals[k] / drawn.residual[level];
              for (int t = 0; t < n_t; ++t)
                acc.cdf[k * n_t + t].add(sir <= spec.cdf_thetas[t] ? 1.0 : 0.0);
            }
          }
        }
      },
      scenario.threads);

  BatchAccum total;
  total.success.resize(K * lcount);
  total.capacity.resize(K * lcount);
  total.fractional.resize(K * lcount);
  total.laplace.resize(n_s * lcount);
  total.cdf.resize(K * n_t);
  for (const auto& acc : accums)
    if (acc.used) total.merge(acc);

  BatchResult result;
  auto unpack = [&](const std::vector<Moments>& src, int rows, int cols) {
    std::vector<std::vector<Estimate>> out(rows);
    for (int r = 0; r < rows; ++r) {
      out[r].reserve(cols);
      for (int c = 0; c < cols; ++c)
        out[r].push_back(to_estimate(src[r * cols + c], scenario.seed));
    }
    return out;
  };
  result.success = unpack(total.success, K, lcount);
  result.capacity = unpack(total.capacity, K, lcount);
  result.fractional_moment = unpack(total.fractional, K, lcount);
  result.laplace = unpack(total.laplace, n_s, lcount);
  result.cdf = unpack(total.cdf, K, n_t);
  result.infinite_sir_draws = total.infinite_draws;
  return result;
}

Estimate estimate_success(const SimScenario& scenario, int k, double theta) {
  BatchSpec spec;
  spec.theta = theta;
  BatchResult r = run_batch(scenario, spec);
  return r.success.at(k).at(scenario.cancel_max);
}

Estimate estimate_capacity(const SimScenario& scenario, int k) {
  BatchSpec spec;
  spec.want_success = false;
  spec.want_capacity = true;
  BatchResult r = run_batch(scenario, spec);
  return r.capacity.at(k).at(scenario.cancel_max);
}

Estimate estimate_fractional_moment(const SimScenario& scenario, int k,
                                    double delta) {
  BatchSpec spec;
  spec.want_success = false;
  spec.fractional_delta = delta;
  BatchResult r = run_batch(scenario, spec);
  return r.fractional_moment.at(k).at(scenario.cancel_max);
}

Estimate estimate_laplace_interference(const SimScenario& scenario, double s) {
  BatchSpec spec;
  spec.want_success = false;
  spec.laplace_s = {s};
  BatchResult r = run_batch(scenario, spec);
  return r.laplace.at(0).at(scenario.cancel_max);
}

std::vector<Estimate> estimate_cdf_grid(const SimScenario& scenario, int k,
                                        const std::vector<double>& thetas) {
  BatchSpec spec;
  spec.want_success = false;
  spec.cdf_thetas = thetas;
  BatchResult r = run_batch(scenario, spec);
  return r.cdf.at(k);
}

Estimate estimate_throughput(const SimScenario& scenario, double theta) {
  RunContext ctx = make_context(scenario);
  const int K = scenario.net.K();
  const int dim = 2 * K;  // (success indicator, rate) per type

  struct ThroughputAccum {
    std::vector<double> sum;
    std::vector<double> outer;  // row-major dim x dim
    long n = 0;
  };
  const std::int64_t n = scenario.replications;
  const std::int64_t chunks = chunk_count(n, kChunk);
  std::vector<ThroughputAccum> accums(chunks);

  parallel_chunks(
      n, kChunk,
      [&](std::int64_t chunk, std::int64_t begin, std::int64_t end) {
        auto& acc = accums[chunk];
        acc.sum.assign(dim, 0.0);
        acc.outer.assign(dim * dim, 0.0);
        std::vector<double> terms;
        DrawnInterference drawn;
        std::vector<double> v(dim);
        for (std::int64_t rep = begin; rep < end; ++rep) {
          CounterRng rng(scenario.seed, static_cast<std::uint64_t>(rep));
          draw_interference(scenario, ctx, rng, terms, drawn);
          int level = std::min(scenario.cancel_max, drawn.term_count);
          for (int k = 0; k < K; ++k) {
            double signal = draw_signal(scenario, ctx, k, rng);
            double sir = drawn.term_count <= scenario.cancel_max
                             ? kInf
                             : signal / drawn.residual[level];
            v[2 * k] = sir > theta ? 1.0 : 0.0;
            v[2 * k + 1] = std::isinf(sir) ? 0.0 : std::log2(1.0 + sir);
          }
          for (int a = 0; a < dim; ++a) {
            acc.sum[a] += v[a];
            for (int b = 0; b < dim; ++b) acc.outer[a * dim + b] += v[a] * v[b];
          }
          ++acc.n;
        }
      },
      scenario.threads);

  std::vector<double> sum(dim, 0.0), outer(dim * dim, 0.0);
  long count = 0;
  for (const auto& acc : accums) {
    if (acc.sum.empty()) continue;
    for (int a = 0; a < dim; ++a) sum[a] += acc.sum[a];
    for (int i = 0; i < dim * dim; ++i) outer[i] += acc.outer[i];
    count += acc.n;
  }
  std::vector<double> mean(dim);
  for (int a = 0; a < dim; ++a) mean[a] = sum[a] / count;

  Estimate est;
  est.n = count;
  est.seed = scenario.seed;
  std::vector<double> grad(dim);
  for (int k = 0; k < K; ++k) {
    double lambda_k = scenario.net.types[k].intensity;
    est.mean += lambda_k * mean[2 * k] * mean[2 * k + 1];
    grad[2 * k] = lambda_k * mean[2 * k + 1];
    grad[2 * k + 1] = lambda_k * mean[2 * k];
  }
  // Delta method over the sample covariance of the 2K-vector.
  double var = 0.0;
  for (int a = 0; a < dim; ++a)
    for (int b = 0; b < dim; ++b) {
      double cov = (outer[a * dim + b] - sum[a] * sum[b] / count) / (count - 1);
      var += grad[a] * cov * grad[b];
    }
  est.stderr_ = std::sqrt(std::max(0.0, var) / count);
  return est;
}

double biased_nearest_distance_ks(const SimScenario& scenario, long samples,
                                  double lambda_prime) {
  SimScenario s = scenario;
  // The biased nearest point must fall in-window with probability 1 - 1e-6.
  double needed = std::sqrt(std::log(1e6) / (kPi * lambda_prime));
  double base = s.window_radius > 0.0
                    ? s.window_radius
                    : auto_window_radius(s.net, s.tail_tolerance);
  s.window_radius = std::max(base, 1.3 * needed);
  RunContext ctx = make_context(s);
  const double inv_alpha = 1.0 / s.net.alpha;

  std::vector<double> t_sq(samples);
  parallel_chunks(
      samples, kChunk,
      [&](std::int64_t, std::int64_t begin, std::int64_t end) {
        for (std::int64_t rep = begin; rep < end; ++rep) {
          CounterRng rng(s.seed, static_cast<std::uint64_t>(rep));
          double best = kInf;
          for (int j = 0; j < s.net.K(); ++j) {
            long count = rng.next_poisson(ctx.expected_counts[j]);
            for (long i = 0; i < count; ++i) {
              double r2 = rng.next_double_open() * ctx.window_radius_sq;
              double gain = s.net.types[j].fading.sample(rng);
              double power = draw_power(s, ctx, j, rng);
              double biased = std::pow(power * gain, -2.0 * inv_alpha) * r2;
              best = std::min(best, biased);
            }
          }
          t_sq[rep] = best;
        }
      },
      s.threads);

  std::sort(t_sq.begin(), t_sq.end());
  const double rate = kPi * lambda_prime;
  double d_stat = 0.0;
  for (long i = 0; i < samples; ++i) {
    double f = -std::expm1(-rate * t_sq[i]);
    double lo = f - static_cast<double>(i) / samples;
    double hi = static_cast<double>(i + 1) / samples - f;
    d_stat = std::max({d_stat, lo, hi});
  }
  return d_stat;
}

double sir_ks_statistic(const SimScenario& scenario, int k, long samples,
                        const std::function<double(double)>& cdf) {
  SimScenario s = scenario;
  s.replications = samples;
  RunContext ctx = make_context(s);
  std::vector<double> draws(samples);
  parallel_chunks(
      samples, kChunk,
      [&](std::int64_t, std::int64_t begin, std::int64_t end) {
        std::vector<double> terms;
        DrawnInterference drawn;
        std::vector<double> signals(s.net.K());
        for (std::int64_t rep = begin; rep < end; ++rep) {
          CounterRng rng(s.seed, static_cast<std::uint64_t>(rep));
          draw_interference(s, ctx, rng, terms, drawn);
          for (int j = 0; j < s.net.K(); ++j)
            signals[j] = draw_signal(s, ctx, j, rng);
          int level = std::min(s.cancel_max, drawn.term_count);
          draws[rep] = drawn.term_count <= s.cancel_max
                           ? kInf
                           : signals[k] / drawn.residual[level];
        }
      },
      s.threads);
  std::sort(draws.begin(), draws.end());
  double d_stat = 0.0;
  for (long i = 0; i < samples; ++i) {
    double f = cdf(draws[i]);
    double lo = f - static_cast<double>(i) / samples;
    double hi = static_cast<double>(i + 1) / samples - f;
    d_stat = std::max({d_stat, lo, hi});
  }
  return d_stat;
}

}  // namespace hetsir::mc
