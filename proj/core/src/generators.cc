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

#include "fbl/generators.h"

#include <cmath>
#include <limits>

#include "fbl/error.h"

namespace fbl {

namespace {

void check_size(std::size_t n) {
  if (n == 0 || n > std::numeric_limits<Vertex>::max()) {
    throw Error(ErrorCode::kInvalidArgument, "vertex count out of range");
  }
}

// Visits the pairs (w, v), w < v < n, that survive independent Bernoulli(p)
// coins, in lexicographic order of v then w. Geometric skips make the cost
// proportional to the number of hits.
template <typename Visit>
void for_each_bernoulli_pair(std::size_t n, double p, Rng& rng, Visit&& visit) {
  if (p <= 0.0) return;
  if (p >= 1.0) {
    for (std::size_t v = 1; v < n; ++v) {
      for (std::size_t w = 0; w < v; ++w) visit(w, v);
    }
    return;
  }
  const double log_q = std::log1p(-p);
  std::int64_t v = 1;
  std::int64_t w = -1;
  const auto nn = static_cast<std::int64_t>(n);
  while (v < nn) {
    const double skip = std::floor(std::log(rng.uniform_positive()) / log_q);
    if (skip >= static_cast<double>(std::numeric_limits<std::int64_t>::max() / 2)) return;
    w += 1 + static_cast<std::int64_t>(skip);
    while (w >= v && v < nn) {
      w -= v;
      ++v;
    }
    if (v < nn) visit(static_cast<std::size_t>(w), static_cast<std::size_t>(v));
  }
}

// Fenwick tree over real weights with prefix-search sampling.
class WeightTree {
 public:
  explicit WeightTree(std::size_t capacity) : tree_(capacity + 1, 0.0) {
    top_ = 1;
    while (top_ * 2 <= capacity) top_ *= 2;
  }

  void add(std::size_t i, double w) {
    for (std::size_t j = i + 1; j < tree_.size(); j += j & (~j + 1)) tree_[j] += w;
  }

  // Smallest i with prefix(i + 1) > target.
  std::size_t search(double target) const {
    std::size_t pos = 0;
    for (std::size_t step = top_; step > 0; step /= 2) {
      const std::size_t next = pos + step;
      if (next < tree_.size() && tree_[next] <= target) {
        pos = next;
        target -= tree_[next];
      }
    }
    return pos;
  }

 private:
  std::vector<double> tree_;
  std::size_t top_;
};

}  // namespace

MultiGraph gen_her(std::size_t n, double lambda, Rng& rng) {
  check_size(n);
  if (!(lambda > 0.0)) throw Error(ErrorCode::kInvalidArgument, "lambda must be > 0");
  const double p = std::min(lambda / static_cast<double>(n), 1.0);
  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(p * n * (n - 1) / 2 * 1.05) + 16);
  for_each_bernoulli_pair(n, p, rng, [&](std::size_t w, std::size_t v) {
    edges.push_back({static_cast<Vertex>(w), static_cast<Vertex>(v)});
  });
  return MultiGraph::from_edges(n, edges);
}

MultiGraph gen_ier(std::size_t n, double lambda, const KernelFunction& kernel, Rng& rng) {
  check_size(n);
  if (!(lambda > 0.0)) throw Error(ErrorCode::kInvalidArgument, "lambda must be > 0");
  const double nd = static_cast<double>(n);
  std::vector<double> f(n);
  for (std::size_t i = 0; i < n; ++i) f[i] = kernel(static_cast<double>(i + 1) / nd);
  const double m_plus = kernel.m_plus();
  // Thinning: propose at the uniform upper rate, accept the actual rate.
  const double p_max = std::min(lambda * m_plus * m_plus / nd, 1.0);
  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(p_max * n * (n - 1) / 2 * 1.05) + 16);
  for_each_bernoulli_pair(n, p_max, rng, [&](std::size_t w, std::size_t v) {
    const double p = std::min(lambda * f[w] * f[v] / nd, 1.0);
    if (p >= p_max || rng.uniform() * p_max < p) {
      edges.push_back({static_cast<Vertex>(w), static_cast<Vertex>(v)});
    }
  });
  return MultiGraph::from_edges(n, edges);
}

MultiGraph gen_cm(const DegreeSequence& degrees, Rng& rng) {
  const std::size_t n = degrees.degrees.size();
  check_size(n);
  std::int64_t total = 0;
  for (std::int64_t d : degrees.degrees) {
    if (d < 0) throw Error(ErrorCode::kInvalidArgument, "negative degree");
    total += d;
  }
  if (total % 2 != 0) throw Error(ErrorCode::kOddDegreeSum, "degree sum is odd");
  std::vector<Vertex> stubs;
  stubs.reserve(static_cast<std::size_t>(total));
  for (std::size_t v = 0; v < n; ++v) {
    stubs.insert(stubs.end(), static_cast<std::size_t>(degrees.degrees[v]),
                 static_cast<Vertex>(v));
  }
  for (std::size_t i = stubs.size(); i > 1; --i) {
    std::swap(stubs[i - 1], stubs[rng.below(i)]);
  }
  std::vector<Edge> edges(stubs.size() / 2);
  for (std::size_t e = 0; e < edges.size(); ++e) edges[e] = {stubs[2 * e], stubs[2 * e + 1]};
  return MultiGraph::from_edges(n, edges);
}

MultiGraph gen_pam(std::size_t n, double delta, Rng& rng) {
  check_size(n);
  if (!(delta >= -1.0)) throw Error(ErrorCode::kDeltaOutOfRange, "delta must be >= -1");
  std::vector<Edge> edges;
  edges.reserve(n);
  std::vector<std::int64_t> degree(n, 0);
  WeightTree tree(n);
  edges.push_back({0, 0});
  degree[0] = 2;
  tree.add(0, 2.0 + delta);
  const double self_mass = 1.0 + delta;
  for (std::size_t t = 1; t < n; ++t) {
    const double td = static_cast<double>(t);
    const double old_mass = td * (2.0 + delta);
    Vertex target;
    while (true) {
      const double x = rng.uniform() * (old_mass + self_mass);
      if (x < self_mass) {
        target = static_cast<Vertex>(t);
        break;
      }
      const std::size_t i = tree.search(x - self_mass);
      // Rounding can land on a zero-weight vertex (delta = -1); redraw.
      if (i < t && static_cast<double>(degree[i]) + delta > 0.0) {
        target = static_cast<Vertex>(i);
        break;
      }
    }
    edges.push_back({static_cast<Vertex>(t), target});
    if (target == t) {
      degree[t] = 2;
      tree.add(t, 2.0 + delta);
    } else {
      degree[t] = 1;
      tree.add(t, 1.0 + delta);
      ++degree[target];
      tree.add(target, 1.0);
    }
  }
  return MultiGraph::from_edges(n, edges);
}

DegreeSequence sample_degree_sequence(const OffspringLaw& law, std::size_t n, Rng& rng,
                                      bool positive_only) {
  check_size(n);
  if (positive_only && law.has_mass_at_zero()) {
    throw Error(ErrorCode::kLawSupportsZero, "degree law has mass at 0");
  }
  constexpr Count kMaxDegree = Count{1} << 32;
  DegreeSequence seq;
  seq.degrees.resize(n);
  std::int64_t total = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const Count d = law.sample(rng);
    if (d > kMaxDegree) {
      throw Error(ErrorCode::kInvalidArgument, "sampled degree exceeds 2^32");
    }
    seq.degrees[i] = static_cast<std::int64_t>(d);
    total += seq.degrees[i];
  }
  if (total % 2 != 0) {
    ++seq.degrees.back();
    seq.repaired = true;
  }
  return seq;
}

}  // namespace fbl
