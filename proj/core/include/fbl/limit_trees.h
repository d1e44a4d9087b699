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

#ifndef FBL_LIMIT_TREES_H_
#define FBL_LIMIT_TREES_H_

#include <cstddef>
#include <vector>

#include "fbl/kernel.h"
#include "fbl/offspring_law.h"
#include "fbl/rng.h"
#include "fbl/variates.h"

namespace fbl {

// Depth-2 view of a rooted limit tree: root degree, the offspring count of
// each root neighbour, and the resulting bias
//   delta = (1/d_phi) sum_j (d_j + 1) - d_phi   (0 when d_phi = 0).
struct LimitSample {
  Count d_phi = 0;
  std::vector<Count> child_offspring;
  double delta = 0.0;
};

// Summary of one draw without the per-child list.
struct DeltaDraw {
  Count d_phi = 0;
  Count child_sum = 0;
  double delta = 0.0;
  // sum_j d_j >= d_phi (d_phi - 1), evaluated in integers.
  bool nonneg = true;
};

DeltaDraw make_draw(Count d_phi, Count child_sum);
void finish_sample(LimitSample& s);

// Two-law Galton-Watson tree: root degree from `root`, neighbour offspring
// i.i.d. from `child`. HER uses Poisson for both; CM uses p and p*.
class GwSampler {
 public:
  GwSampler(OffspringLaw root, OffspringLaw child);
  DeltaDraw draw(Rng& rng) const;
  void sample(Rng& rng, LimitSample& out) const;

 private:
  OffspringLaw root_;
  OffspringLaw child_;
};

// Multi-type Poisson tree of the inhomogeneous model: root type uniform,
// neighbour types with density f / beta_1, offspring Poisson(lambda beta_1 f).
class IerSampler {
 public:
  IerSampler(double lambda, KernelFunction kernel,
             std::size_t quad_points = kDefaultQuadPoints);
  DeltaDraw draw(Rng& rng) const;
  void sample(Rng& rng, LimitSample& out) const;
  double beta1() const { return beta1_; }

 private:
  double lambda_;
  KernelFunction kernel_;
  double beta1_;
};

enum class PolyaLabel { kRoot, kOld, kYoung };

struct PolyaNodeState {
  double age;
  double gamma;
  PolyaLabel label;
};

// kappa(a) = a^(-1/(2+delta)) - 1: expected young offspring per unit Gamma.
double polya_kappa(double delta, double age);

// Polya point tree of preferential attachment (m = 1), to depth 2.
class PolyaSampler {
 public:
  explicit PolyaSampler(double delta);
  double delta() const { return delta_; }

  DeltaDraw draw(Rng& rng) const;
  void sample(Rng& rng, LimitSample& out) const;
  // Same draw keeping node types: nodes[0] is the root, nodes[1] the old
  // child, the rest young children.
  void sample_with_states(Rng& rng, LimitSample& out,
                          std::vector<PolyaNodeState>& nodes) const;

  // Draw conditioned on d_phi = k (k >= 1). Given d_phi = k the root age
  // satisfies A^(1/(2+delta)) ~ Beta(3 + 2 delta, k).
  DeltaDraw draw_given_root_degree(Count k, Rng& rng) const;
  // Offspring count of the old child given d_phi = k.
  Count old_child_offspring_given_root_degree(Count k, Rng& rng) const;

 private:
  double delta_;

  double root_age_given_degree(Count k, Rng& rng) const;
  // Offspring count of an old child of a vertex with log-age `log_parent`.
  Count old_child_offspring(double log_parent, Rng& rng,
                            PolyaNodeState* state) const;
  // Young-child offspring mean Gamma * kappa(t) for a fresh young child.
  double young_child_mean(double root_scale, Rng& rng, PolyaNodeState* state) const;
};

LimitSample sample_delta_gw(const OffspringLaw& root_law, const OffspringLaw& child_law,
                            Rng& rng);
LimitSample sample_delta_ier(double lambda, const KernelFunction& kernel, Rng& rng);
LimitSample sample_delta_pam(double delta, Rng& rng);

}  // namespace fbl

#endif  // FBL_LIMIT_TREES_H_
