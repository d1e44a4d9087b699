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

#ifndef FBL_VARIATES_H_
#define FBL_VARIATES_H_

#include <cstdint>

#include "fbl/rng.h"

namespace fbl {

// Offspring counts. Draws that would exceed kCountCap are clamped to it; every
// comparison the library makes (k(k-1) thresholds, tail grids) sits far below.
using Count = std::uint64_t;
inline constexpr Count kCountCap = Count{1} << 62;

inline Count saturating_add(Count a, Count b) {
  const Count s = a + b;
  return (s < a || s > kCountCap) ? kCountCap : s;
}

// Poisson(mean). Means above 2^50 fall back to a rounded normal approximation
// (relative error far below the sampling noise at that scale).
Count sample_poisson(Rng& rng, double mean);

// Gamma(shape, 1).
double sample_gamma(Rng& rng, double shape);

// Beta(a, b) as a ratio of gammas.
double sample_beta(Rng& rng, double a, double b);

// Zeta law P{X = k} = k^-s / zeta(s), k >= 1, s > 1 (Devroye's rejection).
Count sample_zeta(Rng& rng, double s);

}  // namespace fbl

#endif  // FBL_VARIATES_H_
