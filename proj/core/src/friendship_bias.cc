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

#include "fbl/friendship_bias.h"

#include <cmath>
#include <queue>

#include "fbl/error.h"
#include "fbl/parallel.h"

namespace fbl {

double friendship_bias(const MultiGraph& g, Vertex i) {
  const std::int64_t di = g.degree(i);
  if (di == 0) return 0.0;
  // Integer neighbour sum keeps the quotient exact for small graphs.
  std::int64_t sum = static_cast<std::int64_t>(g.loops(i)) * di;
  for (const Neighbor& nb : g.neighbors(i)) {
    sum += static_cast<std::int64_t>(nb.multiplicity) * g.degree(nb.vertex);
  }
  return static_cast<double>(sum) / static_cast<double>(di) -
         static_cast<double>(di);
}

std::vector<double> bias_vector(const MultiGraph& g) {
  std::vector<double> out(g.num_vertices());
  for (std::size_t i = 0; i < out.size(); ++i) {
    out[i] = friendship_bias(g, static_cast<Vertex>(i));
  }
  return out;
}

EmpiricalMeasure bias_distribution(const MultiGraph& g) {
  if (g.num_vertices() == 0) {
    throw Error(ErrorCode::kInvalidArgument, "graph has no vertices");
  }
  return EmpiricalMeasure::from_samples(bias_vector(g));
}

double average_bias(const MultiGraph& g) {
  if (g.num_vertices() == 0) {
    throw Error(ErrorCode::kInvalidArgument, "graph has no vertices");
  }
  const auto values = bias_vector(g);
  return pairwise_sum(values) / static_cast<double>(values.size());
}

bool all_components_regular(const MultiGraph& g) {
  const std::size_t n = g.num_vertices();
  std::vector<bool> seen(n, false);
  std::queue<Vertex> frontier;
  for (std::size_t s = 0; s < n; ++s) {
    if (seen[s]) continue;
    const std::int64_t d = g.degree(static_cast<Vertex>(s));
    seen[s] = true;
    frontier.push(static_cast<Vertex>(s));
    while (!frontier.empty()) {
      const Vertex v = frontier.front();
      frontier.pop();
      if (g.degree(v) != d) return false;
      for (const Neighbor& nb : g.neighbors(v)) {
        if (!seen[nb.vertex]) {
          seen[nb.vertex] = true;
          frontier.push(nb.vertex);
        }
      }
    }
  }
  return true;
}

ParadoxCertificate paradox_certificate(const MultiGraph& g) {
  if (g.has_loops()) {
    throw Error(ErrorCode::kSelfLoopPresent,
                "the paradox identity holds for loopless graphs only");
  }
  ParadoxCertificate cert{};
  cert.avg = average_bias(g);
  const std::size_t n = g.num_vertices();
  std::vector<double> per_vertex(n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    const double di = static_cast<double>(g.degree(static_cast<Vertex>(i)));
    double s = 0.0;
    for (const Neighbor& nb : g.neighbors(static_cast<Vertex>(i))) {
      const double dj = static_cast<double>(g.degree(nb.vertex));
      const double diff = std::sqrt(dj / di) - std::sqrt(di / dj);
      s += nb.multiplicity * diff * diff;
    }
    per_vertex[i] = s;
  }
  cert.rewrite_avg = pairwise_sum(per_vertex) / (2.0 * static_cast<double>(n));
  cert.nonneg = cert.avg >= -1e-12;
  cert.all_components_regular = all_components_regular(g);
  return cert;
}

}  // namespace fbl
