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
#include <vector>

#include <boost/math/special_functions/zeta.hpp>
#include <gtest/gtest.h>

#include "fbl/error.h"
#include "fbl/offspring_law.h"
#include "fbl/rng.h"

namespace fbl {
namespace {

std::vector<OffspringLaw> laws() {
  return {OffspringLaw::poisson(2.5),
          OffspringLaw::zeta(3.5),
          OffspringLaw::zeta(5.0),
          OffspringLaw::shifted_zeta(2.5, 1),
          OffspringLaw::point_mass(4),
          OffspringLaw::bimodal(0.1, 9, 10),
          OffspringLaw::binomial(12, 0.3),
          OffspringLaw::geometric(0.6),
          OffspringLaw::negative_binomial(2.5, 0.4),
          OffspringLaw::table({1, 20}, {0.2, 0.8})};
}

// Brute-force sums over a long range, with a zeta tail integral.
double brute_moment(const OffspringLaw& law, int order) {
  long double s = 0;
  for (std::uint64_t k = 0; k < 200000; ++k) s += std::pow(static_cast<long double>(k), order) * law.pmf(k);
  return static_cast<double>(s);
}

TEST(OffspringLaw, PmfCdfTailConsistent) {
  for (const auto& law : laws()) {
    long double cum = 0;
    for (std::uint64_t k = 0; k < 60; ++k) {
      EXPECT_NEAR(law.tail(k), static_cast<double>(1 - cum), 1e-12) << law.describe() << " k=" << k;
      cum += law.pmf(k);
      EXPECT_NEAR(law.cdf(k), static_cast<double>(cum), 1e-12) << law.describe() << " k=" << k;
    }
  }
}

TEST(OffspringLaw, NormalisedAndMeanMatchesBruteForce) {
  for (const auto& law : laws()) {
    // Beyond the brute range zeta(2.5) still carries ~6e-9.
    EXPECT_NEAR(brute_moment(law, 0), 1.0, 1e-8) << law.describe();
    // The shifted zeta(2.5) mean converges too slowly for a direct sum.
    if (law.kind() == OffspringLaw::Kind::kShiftedZeta) {
      EXPECT_NEAR(law.mean(), boost::math::zeta(1.5) / boost::math::zeta(2.5) - 1, 1e-13);
      continue;
    }
    // Zeta tails beyond the brute range are ~k^(2-tau); allow for them.
    EXPECT_NEAR(brute_moment(law, 1), law.mean(), 1e-4 * law.mean()) << law.describe();
  }
}

TEST(OffspringLaw, ZetaMomentsDivergeAtTheRightOrder) {
  auto z = OffspringLaw::zeta(3.5);
  EXPECT_TRUE(std::isfinite(z.moment(2)));
  EXPECT_TRUE(std::isinf(z.moment(3)));
  EXPECT_NEAR(z.mean(), boost::math::zeta(2.5) / boost::math::zeta(3.5), 1e-13);
  EXPECT_NEAR(z.inverse_moment(), boost::math::zeta(4.5) / boost::math::zeta(3.5), 1e-13);
}

TEST(OffspringLaw, SizeBiasedMatchesDefinition) {
  for (const auto& law : laws()) {
    if (law.kind() == OffspringLaw::Kind::kShiftedZeta) continue;
    if (law.kind() == OffspringLaw::Kind::kZeta && law.moment(1) == INFINITY) continue;
    auto sb = law.size_biased();
    const double mean = law.mean();
    for (std::uint64_t k = 0; k < 40; ++k) {
      double want = (k + 1) * law.pmf(k + 1) / mean;
      EXPECT_NEAR(sb.pmf(k), want, 1e-12 + 1e-10 * want) << law.describe() << " k=" << k;
    }
  }
}

TEST(OffspringLaw, SamplingMatchesMean) {
  Rng rng(17);
  for (const auto& law : laws()) {
    if (std::isinf(law.moment(2))) continue;
    const int n = 200000;
    double sum = 0, sum2 = 0;
    for (int i = 0; i < n; ++i) {
      double x = static_cast<double>(law.sample(rng));
      sum += x;
      sum2 += x * x;
    }
    double mean = sum / n;
    double se = std::sqrt((sum2 / n - mean * mean) / n);
    EXPECT_NEAR(mean, law.mean(), 5 * se + 1e-12) << law.describe();
  }
}

TEST(OffspringLaw, ZetaSamplerPmf) {
  Rng rng(23);
  auto z = OffspringLaw::zeta(2.2);
  const int n = 400000;
  std::vector<int> counts(6, 0);
  for (int i = 0; i < n; ++i) {
    auto k = z.sample(rng);
    if (k < 6) counts[k]++;
  }
  EXPECT_EQ(counts[0], 0);
  for (int k = 1; k < 6; ++k) {
    double p = z.pmf(k);
    EXPECT_NEAR(counts[k] / static_cast<double>(n), p, 4 * std::sqrt(p * (1 - p) / n));
  }
}

TEST(OffspringLaw, TruncationPoint) {
  auto p = OffspringLaw::poisson(1.0);
  auto k = p.truncation_point(1e-12, 1000);
  ASSERT_TRUE(k.has_value());
  EXPECT_LE(p.tail(*k + 1), 1e-12);
  EXPECT_GT(p.tail(*k), 1e-12);
  EXPECT_FALSE(OffspringLaw::zeta(2.1).truncation_point(1e-12, 1000).has_value());
}

TEST(OffspringLaw, Parse) {
  EXPECT_EQ(parse_law("poisson:2").kind(), OffspringLaw::Kind::kPoisson);
  EXPECT_NEAR(parse_law("zeta:3.5").pmf(1), 1 / boost::math::zeta(3.5), 1e-14);
  EXPECT_EQ(parse_law("point:3").pmf(3), 1.0);
  EXPECT_NEAR(parse_law("bimodal:0.1:9:10").pmf(9), 0.1, 1e-15);
  EXPECT_NEAR(parse_law("twopoint:1:0.2:20:0.8").pmf(20), 0.8, 1e-15);
  EXPECT_NEAR(parse_law("geometric:0.5").pmf(0), 0.5, 1e-15);
  EXPECT_NEAR(parse_law("binomial:10:0.5").pmf(5), 252.0 / 1024, 1e-14);
  for (const char* bad : {"", "poisson", "poisson:x", "zeta:1", "nonsense:1", "point:-1"}) {
    EXPECT_THROW(parse_law(bad), Error) << bad;
  }
}

}  // namespace
}  // namespace fbl
