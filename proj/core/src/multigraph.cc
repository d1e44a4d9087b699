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

#include "fbl/multigraph.h"

#include <algorithm>
#include <string>

#include "fbl/error.h"

namespace fbl {

MultiGraph MultiGraph::from_edges(std::size_t num_vertices,
                                  std::span<const Edge> edges) {
  MultiGraph g;
  g.loops_.assign(num_vertices, 0);
  g.degrees_.assign(num_vertices, 0);
  g.num_edges_ = edges.size();

  std::vector<std::size_t> counts(num_vertices + 1, 0);
  for (const Edge& e : edges) {
    if (e.u >= num_vertices || e.v >= num_vertices) {
      throw Error(ErrorCode::kInvalidArgument,
                  "edge (" + std::to_string(e.u) + ", " + std::to_string(e.v) +
                      ") out of range for n=" + std::to_string(num_vertices));
    }
    if (e.u == e.v) {
      ++g.loops_[e.u];
      g.degrees_[e.u] += 2;
      ++g.total_loops_;
    } else {
      ++counts[e.u + 1];
      ++counts[e.v + 1];
      ++g.degrees_[e.u];
      ++g.degrees_[e.v];
    }
  }
  for (std::size_t i = 0; i < num_vertices; ++i) counts[i + 1] += counts[i];

  // Scatter half-edges, then sort and run-length encode each row.
  std::vector<Vertex> half(counts[num_vertices]);
  std::vector<std::size_t> cursor(counts.begin(), counts.end() - 1);
  for (const Edge& e : edges) {
    if (e.u == e.v) continue;
    half[cursor[e.u]++] = e.v;
    half[cursor[e.v]++] = e.u;
  }

  g.offsets_.assign(num_vertices + 1, 0);
  g.adjacency_.reserve(half.size());
  for (std::size_t v = 0; v < num_vertices; ++v) {
    auto first = half.begin() + static_cast<std::ptrdiff_t>(counts[v]);
    auto last = half.begin() + static_cast<std::ptrdiff_t>(counts[v + 1]);
    std::sort(first, last);
    for (auto it = first; it != last;) {
      auto run_end = std::find_if(it, last, [&](Vertex w) { return w != *it; });
      g.adjacency_.push_back(
          Neighbor{*it, static_cast<std::uint32_t>(run_end - it)});
      it = run_end;
    }
    g.offsets_[v + 1] = g.adjacency_.size();
  }
  g.adjacency_.shrink_to_fit();
  return g;
}

std::uint32_t MultiGraph::multiplicity(Vertex u, Vertex v) const {
  if (u == v) return loops_[u];
  const auto row = neighbors(u);
  auto it = std::lower_bound(
      row.begin(), row.end(), v,
      [](const Neighbor& n, Vertex target) { return n.vertex < target; });
  return (it != row.end() && it->vertex == v) ? it->multiplicity : 0;
}

bool MultiGraph::has_multi_edges() const {
  return std::any_of(adjacency_.begin(), adjacency_.end(),
                     [](const Neighbor& n) { return n.multiplicity > 1; });
}

std::vector<Edge> MultiGraph::edges() const {
  std::vector<Edge> out;
  out.reserve(num_edges_);
  for (Vertex u = 0; u < num_vertices(); ++u) {
    bool loops_written = false;
    for (const Neighbor& n : neighbors(u)) {
      if (!loops_written && n.vertex > u) {
        out.insert(out.end(), loops_[u], Edge{u, u});
        loops_written = true;
      }
      if (n.vertex > u) out.insert(out.end(), n.multiplicity, Edge{u, n.vertex});
    }
    if (!loops_written) out.insert(out.end(), loops_[u], Edge{u, u});
  }
  return out;
}

}  // namespace fbl
