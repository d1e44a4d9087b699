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
#include <numbers>

#include <boost/math/special_functions/zeta.hpp>
#include <gtest/gtest.h>

#include "fbl/special_functions.h"

namespace fbl {
namespace {

// Independent Poisson pmf by the multiplicative recursion.
long double ref_pmf(long double m, unsigned k) {
  long double p = std::exp(-m);
  for (unsigned j = 1; j <= k; ++j) p *= m / j;
  return p;
}

TEST(Zeta, KnownValues) {
  constexpr double pi = std::numbers::pi;
  EXPECT_NEAR(riemann_zeta(2.0), pi * pi / 6, 1e-14);
  EXPECT_NEAR(riemann_zeta(4.0), std::pow(pi, 4) / 90, 1e-14);
  EXPECT_NEAR(riemann_zeta(3.0), 1.2020569031595942, 1e-14);
}

TEST(Zeta, MatchesBoost) {
  for (double s : {1.01, 1.1, 1.5, 2.01, 2.5, 3.5, 7.0, 20.0, 60.0}) {
    double want = boost::math::zeta(s);
    EXPECT_NEAR(riemann_zeta(s), want, 1e-13 * want) << "s=" << s;
  }
}

TEST(Zeta, HurwitzTailMatchesBoostMinusPartialSum) {
  for (double s : {1.5, 2.5, 4.0}) {
    for (unsigned m : {2u, 5u, 40u, 1000u}) {
      long double partial = 0;
      for (unsigned j = 1; j < m; ++j) partial += std::pow(static_cast<long double>(j), -s);
      double want = boost::math::zeta(s) - static_cast<double>(partial);
      EXPECT_NEAR(hurwitz_zeta(s, m), want, 1e-12 * boost::math::zeta(s))
          << "s=" << s << " m=" << m;
    }
  }
}

TEST(Zeta, IntegralBoundsEnclose) {
  for (double s : {1.2, 2.0, 3.5, 9.0}) {
    for (unsigned m : {1u, 3u, 100u}) {
      auto b = truncated_zeta_bounds(s, m);
      double z = hurwitz_zeta(s, m);
      EXPECT_LE(b.lo, z);
      EXPECT_GE(b.hi, z);
    }
  }
}

TEST(Poisson, PmfAndTailsMatchRecursion) {
  for (double m : {0.3, 2.0, 17.5, 60.0}) {
    long double cum = 0;
    for (unsigned k = 0; k < 150; ++k) {
      long double p = ref_pmf(m, k);
      EXPECT_NEAR(poisson_pmf(m, k), static_cast<double>(p), 1e-11 * static_cast<double>(p) + 1e-300);
      EXPECT_NEAR(poisson_tail(m, k), static_cast<double>(1 - cum),
                  1e-12 * static_cast<double>(1 - cum) + 1e-15);
      cum += p;
      EXPECT_NEAR(poisson_cdf(m, k), static_cast<double>(cum), 1e-13);
    }
  }
  EXPECT_EQ(poisson_tail(3.0, 0), 1.0);
}

TEST(Poisson, DeepTailStaysRelative) {
  // P{X >= 60} for mean 1: dominated by the first term.
  long double first = ref_pmf(1.0, 60);
  double tail = poisson_tail(1.0, 60);
  EXPECT_GT(tail, static_cast<double>(first));
  EXPECT_LT(tail, static_cast<double>(first) * 1.02);
  EXPECT_NEAR(poisson_log_pmf(1.0, 60), std::log(static_cast<double>(first)), 1e-10);
}

}  // namespace
}  // namespace fbl
