// Copyright 2026 The fbl Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "fbl/limit_trees.h"

#include <cmath>

#include "fbl/error.h"

namespace fbl {

namespace {

double bias_from_sums(Count d_phi, Count child_sum) {
  if (d_phi == 0) return 0.0;
  const double d = static_cast<double>(d_phi);
  return static_cast<double>(saturating_add(child_sum, d_phi)) / d - d;
}

}  // namespace

DeltaDraw make_draw(Count d_phi, Count child_sum) {
  DeltaDraw out;
  out.d_phi = d_phi;
  out.child_sum = child_sum;
  out.delta = bias_from_sums(d_phi, child_sum);
  using Wide = unsigned __int128;
  out.nonneg = d_phi == 0 ||
               static_cast<Wide>(child_sum) >= static_cast<Wide>(d_phi) * (d_phi - 1);
  return out;
}

void finish_sample(LimitSample& s) {
  Count sum = 0;
  for (Count c : s.child_offspring) sum = saturating_add(sum, c);
  s.delta = bias_from_sums(s.d_phi, sum);
}

GwSampler::GwSampler(OffspringLaw root, OffspringLaw child)
    : root_(std::move(root)), child_(std::move(child)) {}

DeltaDraw GwSampler::draw(Rng& rng) const {
  const Count d = root_.sample(rng);
  Count sum = 0;
  if (child_.kind() == OffspringLaw::Kind::kPoisson) {
    // A sum of d i.i.d. Poisson(m) is Poisson(d m).
    sum = sample_poisson(rng, static_cast<double>(d) * child_.mean());
  } else {
    for (Count j = 0; j < d; ++j) sum = saturating_add(sum, child_.sample(rng));
  }
  return make_draw(d, sum);
}

void GwSampler::sample(Rng& rng, LimitSample& out) const {
  out.d_phi = root_.sample(rng);
  out.child_offspring.resize(out.d_phi);
  for (Count& c : out.child_offspring) c = child_.sample(rng);
  finish_sample(out);
}

IerSampler::IerSampler(double lambda, KernelFunction kernel, std::size_t quad_points)
    : lambda_(lambda), kernel_(std::move(kernel)) {
  if (!(lambda > 0.0)) throw Error(ErrorCode::kInvalidArgument, "lambda must be > 0");
  beta1_ = kernel_.moment(1.0, quad_points);
}

DeltaDraw IerSampler::draw(Rng& rng) const {
  const double scale = lambda_ * beta1_;
  const Count d = sample_poisson(rng, scale * kernel_(rng.uniform()));
  double type_mass = 0.0;
  for (Count j = 0; j < d; ++j) type_mass += kernel_(kernel_.sample_size_biased(rng));
  return make_draw(d, sample_poisson(rng, scale * type_mass));
}

void IerSampler::sample(Rng& rng, LimitSample& out) const {
  const double scale = lambda_ * beta1_;
  out.d_phi = sample_poisson(rng, scale * kernel_(rng.uniform()));
  out.child_offspring.resize(out.d_phi);
  for (Count& c : out.child_offspring) {
    c = sample_poisson(rng, scale * kernel_(kernel_.sample_size_biased(rng)));
  }
  finish_sample(out);
}

double polya_kappa(double delta, double age) {
  return std::expm1(-std::log(age) / (2.0 + delta));
}

PolyaSampler::PolyaSampler(double delta) : delta_(delta) {
  if (!(delta > -1.0)) {
    throw Error(ErrorCode::kDeltaOutOfRange, "Polya point tree needs delta > -1");
  }
}

Count PolyaSampler::old_child_offspring(double log_parent, Rng& rng,
                                        PolyaNodeState* state) const {
  // Ages are handled in log space: for delta near -1 the exponent
  // (2+delta)/(1+delta) is large enough to underflow.
  const double log_age =
      (2.0 + delta_) / (1.0 + delta_) * std::log(rng.uniform_positive()) + log_parent;
  const double gamma = sample_gamma(rng, 2.0 + delta_);
  const double kappa = std::expm1(-log_age / (2.0 + delta_));
  if (state) *state = {std::exp(log_age), gamma, PolyaLabel::kOld};
  return saturating_add(1, sample_poisson(rng, gamma * kappa));
}

double PolyaSampler::young_child_mean(double root_scale, Rng& rng,
                                      PolyaNodeState* state) const {
  // Inverse transform of the normalised intensity on [A, 1]: with
  // r = A^(1/(2+delta)), the age is (r + V (1 - r))^(2+delta) and kappa of
  // that age is (1 - V)(1 - r) / (r + V (1 - r)).
  const double v = rng.uniform();
  const double s = root_scale + v * (1.0 - root_scale);
  const double kappa = (1.0 - v) * (1.0 - root_scale) / s;
  const double gamma = sample_gamma(rng, 1.0 + delta_);
  if (state) *state = {std::pow(s, 2.0 + delta_), gamma, PolyaLabel::kYoung};
  return gamma * kappa;
}

DeltaDraw PolyaSampler::draw(Rng& rng) const {
  const double log_a = std::log(rng.uniform_positive());
  const double gamma = sample_gamma(rng, 1.0 + delta_);
  const Count young = sample_poisson(rng, gamma * std::expm1(-log_a / (2.0 + delta_)));
  const Count d_phi = saturating_add(young, 1);
  Count sum = old_child_offspring(log_a, rng, nullptr);
  const double r = std::exp(log_a / (2.0 + delta_));
  double young_mass = 0.0;
  for (Count j = 0; j < young; ++j) young_mass += young_child_mean(r, rng, nullptr);
  sum = saturating_add(sum, sample_poisson(rng, young_mass));
  return make_draw(d_phi, sum);
}

void PolyaSampler::sample(Rng& rng, LimitSample& out) const {
  std::vector<PolyaNodeState> nodes;
  sample_with_states(rng, out, nodes);
}

void PolyaSampler::sample_with_states(Rng& rng, LimitSample& out,
                                      std::vector<PolyaNodeState>& nodes) const {
  const double log_a = std::log(rng.uniform_positive());
  const double gamma = sample_gamma(rng, 1.0 + delta_);
  const Count young = sample_poisson(rng, gamma * std::expm1(-log_a / (2.0 + delta_)));
  out.d_phi = saturating_add(young, 1);
  out.child_offspring.resize(out.d_phi);
  nodes.resize(out.d_phi + 1);
  nodes[0] = {std::exp(log_a), gamma, PolyaLabel::kRoot};
  out.child_offspring[0] = old_child_offspring(log_a, rng, &nodes[1]);
  const double r = std::exp(log_a / (2.0 + delta_));
  for (Count j = 1; j < out.d_phi; ++j) {
    out.child_offspring[j] = sample_poisson(rng, young_child_mean(r, rng, &nodes[j + 1]));
  }
  finish_sample(out);
}

double PolyaSampler::root_age_given_degree(Count k, Rng& rng) const {
  const double u = sample_beta(rng, 3.0 + 2.0 * delta_, static_cast<double>(k));
  return (2.0 + delta_) * std::log(u);
}

DeltaDraw PolyaSampler::draw_given_root_degree(Count k, Rng& rng) const {
  if (k == 0) throw Error(ErrorCode::kInvalidArgument, "root degree is at least 1");
  const double log_a = root_age_given_degree(k, rng);
  Count sum = old_child_offspring(log_a, rng, nullptr);
  const double r = std::exp(log_a / (2.0 + delta_));
  double young_mass = 0.0;
  for (Count j = 1; j < k; ++j) young_mass += young_child_mean(r, rng, nullptr);
  sum = saturating_add(sum, sample_poisson(rng, young_mass));
  return make_draw(k, sum);
}

Count PolyaSampler::old_child_offspring_given_root_degree(Count k, Rng& rng) const {
  if (k == 0) throw Error(ErrorCode::kInvalidArgument, "root degree is at least 1");
  return old_child_offspring(root_age_given_degree(k, rng), rng, nullptr);
}

LimitSample sample_delta_gw(const OffspringLaw& root_law, const OffspringLaw& child_law,
                            Rng& rng) {
  LimitSample out;
  GwSampler(root_law, child_law).sample(rng, out);
  return out;
}

LimitSample sample_delta_ier(double lambda, const KernelFunction& kernel, Rng& rng) {
  LimitSample out;
  IerSampler(lambda, kernel).sample(rng, out);
  return out;
}

LimitSample sample_delta_pam(double delta, Rng& rng) {
  LimitSample out;
  PolyaSampler(delta).sample(rng, out);
  return out;
}

}  // namespace fbl
