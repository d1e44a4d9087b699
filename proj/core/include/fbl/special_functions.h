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

#ifndef FBL_SPECIAL_FUNCTIONS_H_
#define FBL_SPECIAL_FUNCTIONS_H_

#include <cstdint>

namespace fbl {

// zeta_m(s) = sum_{j >= m} j^-s for s > 1, m >= 1.
double hurwitz_zeta(double s, std::uint64_t m);
inline double riemann_zeta(double s) { return hurwitz_zeta(s, 1); }

struct ZetaBounds {
  double lo;
  double hi;
};

// Integral comparison bounds m^(1-s)/(s-1) <= zeta_m(s) <= 1 + m^(1-s)/(s-1).
ZetaBounds truncated_zeta_bounds(double s, std::uint64_t m);

// Poisson(mean) helpers; tails are evaluated directly, not as 1 - cdf.
double poisson_pmf(double mean, std::uint64_t k);
double poisson_log_pmf(double mean, std::uint64_t k);
// P{X <= k}.
double poisson_cdf(double mean, std::uint64_t k);
// P{X >= k}.
double poisson_tail(double mean, std::uint64_t k);

}  // namespace fbl

#endif  // FBL_SPECIAL_FUNCTIONS_H_
