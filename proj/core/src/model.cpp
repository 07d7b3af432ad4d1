// SPDX-License-Identifier: Apache-2.0
//
// hetsir - SIR statistics for heterogeneous Poisson wireless networks
// Copyright (C) 2026 the hetsir authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at http://www.apache.org/licenses/LICENSE-2.0

#include "hetsir/model.hpp"

#include <cmath>
#include <sstream>

#include "hetsir/errors.hpp"
#include "hetsir/quadrature.hpp"
#include "hetsir/special_functions.hpp"

namespace hetsir {

using num::gamma_fn;
using num::log_gamma;

DistributionSpec::DistributionSpec(DistKind kind, double mean, double shape)
    : kind_(kind), mean_(mean), shape_(shape) {}

DistributionSpec DistributionSpec::constant(double value) {
  if (!(value > 0.0)) throw DomainError("constant spec requires value > 0");
  return {DistKind::kConstant, value, 0.0};
}

DistributionSpec DistributionSpec::exponential(double mean) {
  if (!(mean > 0.0)) throw DomainError("exponential spec requires mean > 0");
  return {DistKind::kExponential, mean, 1.0};
}

DistributionSpec DistributionSpec::gamma(double shape, double mean) {
  if (!(shape > 0.0)) throw DomainError("gamma spec requires shape > 0");
  if (!(mean > 0.0)) throw DomainError("gamma spec requires mean > 0");
  return {DistKind::kGamma, mean, shape};
}

DistributionSpec DistributionSpec::erlang(int shape, double mean) {
  if (shape < 1) throw DomainError("erlang spec requires integer shape >= 1");
  if (!(mean > 0.0)) throw DomainError("erlang spec requires mean > 0");
  return {DistKind::kErlang, mean, static_cast<double>(shape)};
}

double DistributionSpec::shape() const {
  if (is_constant()) throw DomainError("constant spec has no shape");
  return shape_;
}

bool DistributionSpec::integer_shape() const {
  if (is_constant()) return false;
  return std::fabs(shape_ - std::round(shape_)) < 1e-12;
}

double DistributionSpec::fractional_moment(double p) const {
  if (p == 0.0) return 1.0;
  if (p == 1.0) return mean_;
  if (is_constant()) return std::pow(mean_, p);
  // Gamma(shape m, mean): E[X^p] = (mean/m)^p Gamma(m+p)/Gamma(m), p > -m.
  if (p <= -shape_) {
    std::ostringstream msg;
    msg << "fractional moment E[X^" << p << "] diverges for " << describe();
    throw DivergenceError(msg.str());
  }
  double scale = mean_ / shape_;
  return std::pow(scale, p) * std::exp(log_gamma(shape_ + p) - log_gamma(shape_));
}

double DistributionSpec::laplace(double s) const {
  if (is_constant()) return std::exp(-s * mean_);
  // (1 + s*scale)^{-m}
  return std::exp(-shape_ * std::log1p(s * mean_ / shape_));
}

std::complex<double> DistributionSpec::laplace(std::complex<double> s) const {
  if (is_constant()) return std::exp(-s * mean_);
  return std::pow(1.0 + s * (mean_ / shape_), -shape_);
}

double DistributionSpec::density(double x) const {
  if (is_constant()) throw DomainError("constant spec has no density");
  if (!(x > 0.0)) return 0.0;
  double scale = mean_ / shape_;
  double log_pdf = (shape_ - 1.0) * std::log(x) - x / scale -
                   shape_ * std::log(scale) - log_gamma(shape_);
  return std::exp(log_pdf);
}

double DistributionSpec::sample(CounterRng& rng) const {
  switch (kind_) {
    case DistKind::kConstant:
      return mean_;
    case DistKind::kExponential:
      return mean_ * rng.next_exponential();
    case DistKind::kGamma:
    case DistKind::kErlang:
      return (mean_ / shape_) * rng.next_gamma(shape_);
  }
  return mean_;
}

DistributionSpec DistributionSpec::scaled(double factor) const {
  if (!(factor > 0.0)) throw DomainError("scaled requires factor > 0");
  DistributionSpec copy = *this;
  copy.mean_ *= factor;
  return copy;
}

std::vector<std::pair<double, double>> DistributionSpec::expectation_nodes(int n) const {
  if (is_constant()) return {{mean_, 1.0}};
  const num::GaussRule& rule = num::gauss_laguerre(n, shape_ - 1.0);
  const double scale = mean_ / shape_;
  const double norm = gamma_fn(shape_);
  std::vector<std::pair<double, double>> nodes;
  nodes.reserve(rule.nodes.size());
  for (std::size_t i = 0; i < rule.nodes.size(); ++i)
    nodes.emplace_back(scale * rule.nodes[i], rule.weights[i] / norm);
  return nodes;
}

std::string DistributionSpec::describe() const {
  std::ostringstream out;
  switch (kind_) {
    case DistKind::kConstant:
      out << "constant(" << mean_ << ")";
      break;
    case DistKind::kExponential:
      out << "exponential(mean=" << mean_ << ")";
      break;
    case DistKind::kGamma:
      out << "gamma(shape=" << shape_ << ", mean=" << mean_ << ")";
      break;
    case DistKind::kErlang:
      out << "erlang(shape=" << static_cast<int>(shape_) << ", mean=" << mean_ << ")";
      break;
  }
  return out.str();
}

NetworkConfig NetworkConfig::validated() const {
  NetworkConfig out = *this;
  if (out.types.empty()) throw DomainError("NetworkConfig needs at least one type");
  if (!(out.alpha > 2.0)) throw DomainError("NetworkConfig requires alpha > 2");
  if (!(out.theta > 0.0)) throw DomainError("NetworkConfig requires theta > 0");
  if (out.cancel_count < 0) throw DomainError("NetworkConfig requires L >= 0");
  for (auto& type : out.types) {
    if (!(type.intensity > 0.0))
      throw DomainError("TypeClassConfig requires intensity > 0");
    if (type.rx_antennas < 1)
      throw DomainError("TypeClassConfig requires rx_antennas >= 1");
    if (!(type.pc_exponent >= -1.0))
      throw DomainError("TypeClassConfig requires pc_exponent >= -1");
    // Unit-mean channel gain is a modeling assumption, not an input contract.
    if (type.fading.mean() != 1.0) type.fading = type.fading.scaled(1.0 / type.fading.mean());
    // Transmit distances live on [1, inf); random kinds keep their law and
    // must at least have mean >= 1.
    if (type.distance.is_constant() && type.distance.mean() < 1.0)
      throw DomainError("TypeClassConfig requires distance >= 1 m");
    if (!type.distance.is_constant() && type.distance.mean() < 1.0)
      throw DomainError("TypeClassConfig requires mean distance >= 1 m");
  }
  return out;
}

void NetworkConfig::check() const {
  if (types.empty()) throw DomainError("NetworkConfig needs at least one type");
  if (!(alpha > 2.0)) throw DomainError("NetworkConfig requires alpha > 2");
  if (!(theta > 0.0)) throw DomainError("NetworkConfig requires theta > 0");
}

namespace {

void check_type_index(const NetworkConfig& net, int k) {
  if (k < 0 || k >= net.K()) throw DomainError("type index out of range");
}

}  // namespace

DerivedIntensities derive_intensities(const NetworkConfig& net) {
  net.check();
  const double x = 2.0 / net.alpha;
  DerivedIntensities out;
  out.lambda_tilde_k.reserve(net.types.size());
  for (const auto& type : net.types) {
    double lt = type.intensity * type.fading.fractional_moment(x) *
                type.power.fractional_moment(x);
    out.lambda_tilde_k.push_back(lt);
    out.lambda_tilde += lt;
  }
  // Power-controlled effective intensity: mean powers with the two Jensen
  // ratio factors from the gain/distance feedback.
  for (const auto& type : net.types) {
    double gamma_k = type.pc_exponent;
    double h_ratio = type.fading.fractional_moment(x * gamma_k) /
                     std::pow(type.fading.fractional_moment(gamma_k), x);
    double r2g = type.distance.fractional_moment(-2.0 * gamma_k);
    double rag = type.distance.fractional_moment(-net.alpha * gamma_k);
    double r_ratio = r2g / std::pow(rag, x);
    out.lambda_tilde_pc += type.intensity * std::pow(type.power.mean(), x) *
                           type.fading.fractional_moment(x) * h_ratio * r_ratio;
  }
  out.Lambda_tilde_k.reserve(net.types.size());
  for (int k = 0; k < net.K(); ++k) {
    double es = mean_signal(net, k);
    out.Lambda_tilde_k.push_back(3.141592653589793238462643 * out.lambda_tilde /
                                 std::pow(es, x));
  }
  return out;
}

double mapped_intensity(const NetworkConfig& net) {
  net.check();
  const double x = 2.0 / net.alpha;
  double total = 0.0;
  for (const auto& type : net.types)
    total += type.intensity * type.power.fractional_moment(x) *
             type.fading.fractional_moment(x);
  return total;
}

double mean_signal(const NetworkConfig& net, int k) {
  check_type_index(net, k);
  const auto& type = net.types[k];
  return type.power.mean() * type.fading.mean() *
         type.distance.fractional_moment(-net.alpha);
}

double signal_moment(const NetworkConfig& net, int k, double q) {
  check_type_index(net, k);
  const auto& type = net.types[k];
  return type.power.fractional_moment(q) * type.fading.fractional_moment(q) *
         type.distance.fractional_moment(-net.alpha * q);
}

SignalProfile signal_profile(const NetworkConfig& net, int k) {
  check_type_index(net, k);
  const auto& type = net.types[k];
  SignalProfile profile;
  profile.mean = mean_signal(net, k);

  const bool p_random = !type.power.is_constant();
  const bool h_random = !type.fading.is_constant();
  const bool r_random = !type.distance.is_constant();
  const int random_count = int(p_random) + int(h_random) + int(r_random);

  if (random_count == 0) {
    profile.kind = SignalProfile::Kind::kConstant;
    return profile;
  }
  // A single random gamma-family factor entering linearly keeps S gamma;
  // a random distance enters through R^{-alpha} and breaks the shape.
  if (random_count == 1 && !r_random) {
    const DistributionSpec& factor = p_random ? type.power : type.fading;
    profile.kind = SignalProfile::Kind::kGammaShape;
    profile.shape = factor.shape();
    profile.integer_shape = factor.integer_shape();
    return profile;
  }
  profile.kind = SignalProfile::Kind::kGeneral;
  return profile;
}

double expect_signal(const NetworkConfig& net, int k,
                     const std::function<double(double)>& g,
                     int nodes_per_factor) {
  check_type_index(net, k);
  const auto& type = net.types[k];
  auto p_nodes = type.power.expectation_nodes(nodes_per_factor);
  auto h_nodes = type.fading.expectation_nodes(nodes_per_factor);
  auto r_nodes = type.distance.expectation_nodes(nodes_per_factor);
  const double alpha = net.alpha;

  double total = 0.0;
  for (const auto& [p, wp] : p_nodes) {
    for (const auto& [h, wh] : h_nodes) {
      const double ph = p * h;
      const double w_ph = wp * wh;
      for (const auto& [r, wr] : r_nodes)
        total += w_ph * wr * g(ph * std::pow(r, -alpha));
    }
  }
  return total;
}

double laplace_signal_hat(const NetworkConfig& net, int k, double s) {
  SignalProfile profile = signal_profile(net, k);
  switch (profile.kind) {
    case SignalProfile::Kind::kConstant:
      return std::exp(-s);
    case SignalProfile::Kind::kGammaShape: {
      double m = profile.shape;
      return std::exp(-m * std::log1p(s / m));
    }
    case SignalProfile::Kind::kGeneral: {
      double mean = profile.mean;
      return expect_signal(net, k, [&](double v) { return std::exp(-s * v / mean); });
    }
  }
  return 0.0;
}

}  // namespace hetsir
