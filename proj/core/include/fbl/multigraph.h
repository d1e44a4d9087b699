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

#ifndef FBL_MULTIGRAPH_H_
#define FBL_MULTIGRAPH_H_

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace fbl {

using Vertex = std::uint32_t;

struct Edge {
  Vertex u;
  Vertex v;
  friend bool operator==(const Edge&, const Edge&) = default;
};

struct Neighbor {
  Vertex vertex;
  std::uint32_t multiplicity;
};

// Static undirected multigraph in compressed adjacency form.
//
// Neighbour lists are sorted by vertex id and exclude the vertex itself;
// self-loops are tracked separately. The degree of a vertex is the sum of its
// neighbour multiplicities plus twice its loop count.
class MultiGraph {
 public:
  MultiGraph() = default;

  // Builds the graph from an unordered edge list; "u u" is a self-loop.
  static MultiGraph from_edges(std::size_t num_vertices,
                               std::span<const Edge> edges);

  std::size_t num_vertices() const { return degrees_.size(); }
  // Number of edges counted with multiplicity; each loop counts once.
  std::size_t num_edges() const { return num_edges_; }

  std::int64_t degree(Vertex v) const { return degrees_[v]; }
  std::uint32_t loops(Vertex v) const { return loops_[v]; }
  std::span<const std::int64_t> degrees() const { return degrees_; }
  std::span<const Neighbor> neighbors(Vertex v) const {
    return {adjacency_.data() + offsets_[v], adjacency_.data() + offsets_[v + 1]};
  }
  // A_{u,v}: number of u-v edges; for u == v the number of self-loops.
  std::uint32_t multiplicity(Vertex u, Vertex v) const;

  bool has_loops() const { return total_loops_ > 0; }
  bool has_multi_edges() const;

  // Canonical edge list: u <= v, sorted, one entry per parallel edge.
  std::vector<Edge> edges() const;

 private:
  std::vector<std::size_t> offsets_{0};
  std::vector<Neighbor> adjacency_;
  std::vector<std::uint32_t> loops_;
  std::vector<std::int64_t> degrees_;
  std::size_t num_edges_ = 0;
  std::size_t total_loops_ = 0;
};

}  // namespace fbl

#endif  // FBL_MULTIGRAPH_H_
