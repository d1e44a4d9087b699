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

#include "fbl/variates.h"

#include <cmath>
#include <random>

namespace fbl {
namespace {

Count clamp_count(double x) {
  if (!(x < static_cast<double>(kCountCap))) return kCountCap;
  if (x <= 0.0) return 0;
  return static_cast<Count>(x);
}

}  // namespace

Count sample_poisson(Rng& rng, double mean) {
  if (!(mean > 0.0)) return 0;
  if (mean > 0x1.0p50) {
    std::normal_distribution<double> normal(mean, std::sqrt(mean));
    return clamp_count(std::round(normal(rng)));
  }
  std::poisson_distribution<std::int64_t> poisson(mean);
  return static_cast<Count>(poisson(rng));
}

double sample_gamma(Rng& rng, double shape) {
  std::gamma_distribution<double> gamma(shape, 1.0);
  return gamma(rng);
}

double sample_beta(Rng& rng, double a, double b) {
  const double x = sample_gamma(rng, a);
  const double y = sample_gamma(rng, b);
  return x / (x + y);
}

Count sample_zeta(Rng& rng, double s) {
  const double am1 = s - 1.0;
  const double b = std::exp2(am1);
  while (true) {
    const double u = rng.uniform_positive();
    const double v = rng.uniform();
    double x = std::floor(std::pow(u, -1.0 / am1));
    if (!std::isfinite(x)) x = 1e300;
    const double t_minus_1 = std::expm1(am1 * std::log1p(1.0 / x));
    if (v * x * t_minus_1 / (b - 1.0) <= (1.0 + t_minus_1) / b) {
      return clamp_count(x);
    }
  }
}

}  // namespace fbl
