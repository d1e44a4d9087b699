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

#ifndef FBL_GENERATORS_H_
#define FBL_GENERATORS_H_

#include <cstddef>
#include <cstdint>
#include <vector>

#include "fbl/kernel.h"
#include "fbl/multigraph.h"
#include "fbl/offspring_law.h"
#include "fbl/rng.h"

namespace fbl {

struct DegreeSequence {
  std::vector<std::int64_t> degrees;
  // Set when the last entry was bumped by one to make the sum even.
  bool repaired = false;
};

// Erdos-Renyi: every pair independently with probability min(lambda/n, 1).
MultiGraph gen_her(std::size_t n, double lambda, Rng& rng);

// Rank-1 inhomogeneous graph: pair {i, j} with probability
// min(lambda f(x_i) f(x_j) / n, 1), x_i = (i + 1) / n.
MultiGraph gen_ier(std::size_t n, double lambda, const KernelFunction& kernel, Rng& rng);

// Configuration model by uniform half-edge matching; may create loops and
// parallel edges.
MultiGraph gen_cm(const DegreeSequence& degrees, Rng& rng);

// Preferential attachment with m = 1: vertex t attaches to i with probability
// proportional to d_i + delta, or to itself with weight 1 + delta.
MultiGraph gen_pam(std::size_t n, double delta, Rng& rng);

// n i.i.d. draws from `law` with parity repair. When `positive_only` is set a
// law with mass at 0 is rejected.
DegreeSequence sample_degree_sequence(const OffspringLaw& law, std::size_t n, Rng& rng,
                                      bool positive_only = true);

}  // namespace fbl

#endif  // FBL_GENERATORS_H_
