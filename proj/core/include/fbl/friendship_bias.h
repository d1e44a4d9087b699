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

#ifndef FBL_FRIENDSHIP_BIAS_H_
#define FBL_FRIENDSHIP_BIAS_H_

#include <vector>

#include "fbl/empirical_measure.h"
#include "fbl/multigraph.h"

namespace fbl {

// Mean neighbour degree minus own degree; 0 for isolated vertices. A self-loop
// contributes A_ii = 1 to the neighbour sum (and 2 to the degree).
double friendship_bias(const MultiGraph& g, Vertex i);

std::vector<double> bias_vector(const MultiGraph& g);

// Uniform measure over the per-vertex biases; weights count/n.
EmpiricalMeasure bias_distribution(const MultiGraph& g);

double average_bias(const MultiGraph& g);

struct ParadoxCertificate {
  double avg;
  bool nonneg;
  // The same average via (1/2n) sum A_ij (sqrt(d_j/d_i) - sqrt(d_i/d_j))^2.
  double rewrite_avg;
  bool all_components_regular;
};

// Throws kSelfLoopPresent on graphs with loops.
ParadoxCertificate paradox_certificate(const MultiGraph& g);

bool all_components_regular(const MultiGraph& g);

}  // namespace fbl

#endif  // FBL_FRIENDSHIP_BIAS_H_
