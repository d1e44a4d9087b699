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


#include <cmath>
#include <numeric>
#include <set>
#include <vector>

#include <gtest/gtest.h>

#include "fbl/error.h"
#include "fbl/generators.h"
#include "fbl/offspring_law.h"
#include "fbl/rng.h"
#include "fbl/special_functions.h"

namespace fbl {
namespace {

std::int64_t degree_sum(const MultiGraph& g) {
  auto d = g.degrees();
  return std::accumulate(d.begin(), d.end(), std::int64_t{0});
}

TEST(Her, ClampedProbabilityGivesCompleteGraph) {
  Rng rng(1);
  MultiGraph g = gen_her(12, 20.0, rng);
  EXPECT_EQ(g.num_edges(), 66u);
  EXPECT_FALSE(g.has_loops());
  EXPECT_FALSE(g.has_multi_edges());
}

TEST(Her, MeanDegree) {
  const std::size_t n = 100000;
  const int reps = 20;
  double sum = 0, sum2 = 0;
  for (int r = 0; r < reps; ++r) {
    Rng rng = Rng::stream(7, r);
    MultiGraph g = gen_her(n, 2.0, rng);
    double mean = static_cast<double>(degree_sum(g)) / n;
    sum += mean;
    sum2 += mean * mean;
  }
  double mean = sum / reps;
  // Per-graph mean degree 2E/n with E ~ Binomial(n(n-1)/2, 2/n).
  double p = 2.0 / n, pairs = n * (n - 1) / 2.0;
  double sd = 2.0 * std::sqrt(pairs * p * (1 - p)) / n;
  EXPECT_NEAR(mean, 2.0 * (n - 1) / n, 3 * sd / std::sqrt(reps));
  EXPECT_GT(sum2, 0.0);
}

TEST(Her, DeterministicPerSeed) {
  Rng a(99), b(99);
  EXPECT_EQ(gen_her(5000, 3.0, a).edges(), gen_her(5000, 3.0, b).edges());
}

TEST(Ier, ConstantKernelMatchesHerEdgeCount) {
  // f = 1 gives the HER law; compare edge count moments over replicates.
  const std::size_t n = 20000;
  const int reps = 30;
  double ier_sum = 0;
  for (int r = 0; r < reps; ++r) {
    Rng rng = Rng::stream(3, r);
    ier_sum += static_cast<double>(gen_ier(n, 1.5, KernelFunction::constant(1.0), rng).num_edges());
  }
  double pairs = n * (n - 1) / 2.0, p = 1.5 / n;
  double want = pairs * p, sd = std::sqrt(pairs * p * (1 - p));
  EXPECT_NEAR(ier_sum / reps, want, 3 * sd / std::sqrt(reps));
}

TEST(Ier, TwoBlockWithinBDensity) {
  const std::size_t n = 40000;
  const double lambda = 2.0, b = 2.0;
  auto f = KernelFunction::piecewise_constant({0.0, 0.5, 1.0}, {1.0, b});
  const int reps = 10;
  double within = 0;
  std::size_t size_b = 0;
  for (int r = 0; r < reps; ++r) {
    Rng rng = Rng::stream(4, r);
    MultiGraph g = gen_ier(n, lambda, f, rng);
    // x_i = (i + 1) / n >= 0.5 puts vertex i in B.
    std::size_t first_b = n / 2 - 1;
    size_b = n - first_b;
    for (const Edge& e : g.edges()) within += (e.u >= first_b && e.v >= first_b);
  }
  double pairs = size_b * (size_b - 1) / 2.0;
  double p = b * b * lambda / n;
  double density = within / reps / pairs;
  double se = std::sqrt(p * (1 - p) / pairs / reps);
  EXPECT_NEAR(density, p, 3 * se);
}

TEST(Cm, DegreesArePreserved) {
  Rng rng(2);
  for (int trial = 0; trial < 50; ++trial) {
    DegreeSequence seq{{2, 2, 2}, false};
    MultiGraph g = gen_cm(seq, rng);
    for (Vertex v = 0; v < 3; ++v) EXPECT_EQ(g.degree(v), 2);
  }
  DegreeSequence one{{1, 1}, false};
  MultiGraph g = gen_cm(one, rng);
  ASSERT_EQ(g.num_edges(), 1u);
  EXPECT_EQ(g.multiplicity(0, 1), 1u);
}

TEST(Cm, TriangleAndLoopConfigurationsBothOccur) {
  Rng rng(5);
  std::set<bool> seen;
  for (int trial = 0; trial < 200; ++trial) {
    seen.insert(gen_cm(DegreeSequence{{2, 2, 2}, false}, rng).has_loops());
  }
  EXPECT_EQ(seen.size(), 2u);
}

TEST(Cm, OddSumRejected) {
  Rng rng(1);
  try {
    gen_cm(DegreeSequence{{1, 2, 2}, false}, rng);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kOddDegreeSum);
  }
}

TEST(Cm, ZetaDegreePmf) {
  Rng rng(8);
  const std::size_t n = 100000;
  auto law = OffspringLaw::zeta(3.5);
  DegreeSequence seq = sample_degree_sequence(law, n, rng);
  MultiGraph g = gen_cm(seq, rng);
  std::vector<int> counts(11, 0);
  for (Vertex v = 0; v < n; ++v) {
    if (g.degree(v) <= 10) counts[g.degree(v)]++;
  }
  for (int k = 1; k <= 10; ++k) {
    double p = std::pow(k, -3.5) / riemann_zeta(3.5);
    EXPECT_NEAR(counts[k] / static_cast<double>(n), p, 3 * std::sqrt(p * (1 - p) / n) + 1.0 / n)
        << "k=" << k;
  }
}

TEST(DegreeSequence, PointMassAndRepair) {
  Rng rng(1);
  auto four = sample_degree_sequence(OffspringLaw::point_mass(3), 4, rng);
  EXPECT_EQ(four.degrees, (std::vector<std::int64_t>{3, 3, 3, 3}));
  EXPECT_FALSE(four.repaired);
  auto five = sample_degree_sequence(OffspringLaw::point_mass(3), 5, rng);
  EXPECT_EQ(five.degrees, (std::vector<std::int64_t>{3, 3, 3, 3, 4}));
  EXPECT_TRUE(five.repaired);
}

TEST(DegreeSequence, ZetaMean) {
  Rng rng(12);
  auto seq = sample_degree_sequence(OffspringLaw::zeta(3.0), 1000000, rng);
  double mean = std::accumulate(seq.degrees.begin(), seq.degrees.end(), 0.0) / seq.degrees.size();
  double want = riemann_zeta(2.0) / riemann_zeta(3.0);
  EXPECT_NEAR(mean, want, 0.01 * want);
}

TEST(DegreeSequence, RejectsZeroMassWhenPositiveOnly) {
  Rng rng(1);
  try {
    sample_degree_sequence(OffspringLaw::poisson(2.0), 10, rng);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kLawSupportsZero);
  }
  EXPECT_NO_THROW(sample_degree_sequence(OffspringLaw::poisson(2.0), 10, rng, false));
}

TEST(Pam, SingleVertexHasOneLoop) {
  Rng rng(1);
  MultiGraph g = gen_pam(1, 0.0, rng);
  EXPECT_EQ(g.num_edges(), 1u);
  EXPECT_EQ(g.loops(0), 1u);
  EXPECT_EQ(g.degree(0), 2);
}

TEST(Pam, DegreeSumIsTwiceN) {
  Rng rng(4);
  for (double delta : {-0.9, 0.0, 3.0}) {
    for (std::size_t n : {2u, 17u, 5000u}) {
      EXPECT_EQ(degree_sum(gen_pam(n, delta, rng)), static_cast<std::int64_t>(2 * n));
    }
  }
  EXPECT_THROW(gen_pam(10, -1.5, rng), Error);
  EXPECT_NO_THROW(gen_pam(10, -1.0, rng));
}

TEST(Pam, FirstStepProbabilities) {
  // n = 2: vertex 2 joins vertex 1 with weight 2 + delta or loops with 1 + delta.
  const double delta = 0.5;
  Rng rng(6);
  const int n = 100000;
  int loops = 0;
  for (int i = 0; i < n; ++i) loops += gen_pam(2, delta, rng).loops(1) > 0;
  const double p = (1 + delta) / ((2 + delta) + (1 + delta));
  EXPECT_NEAR(loops / static_cast<double>(n), p, 4 * std::sqrt(p * (1 - p) / n));
}

TEST(Pam, DegreeOneShareNearTwoThirds) {
  Rng rng(10);
  const std::size_t n = 100000;
  MultiGraph g = gen_pam(n, 0.0, rng);
  int ones = 0;
  for (Vertex v = 0; v < n; ++v) ones += g.degree(v) == 1;
  double p = 2.0 / 3;
  EXPECT_NEAR(ones / static_cast<double>(n), p, 3 * std::sqrt(p * (1 - p) / n));
}

}  // namespace
}  // namespace fbl
