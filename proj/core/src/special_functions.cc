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

#include "fbl/special_functions.h"

#include <algorithm>
#include <cmath>

#include <boost/math/special_functions/gamma.hpp>

#include "fbl/error.h"

namespace fbl {

namespace {

// B_{2j} / (2j)!
constexpr double kBernoulliOverFactorial[] = {
    1.0 / 12.0,          -1.0 / 720.0,           1.0 / 30240.0,
    -1.0 / 1209600.0,    1.0 / 47900160.0,       -691.0 / 1307674368000.0,
    1.0 / 74724249600.0,
};

}  // namespace

double hurwitz_zeta(double s, std::uint64_t m) {
  if (!(s > 1.0) || m == 0) {
    throw Error(ErrorCode::kDomainError, "hurwitz_zeta needs s > 1, m >= 1");
  }
  // Euler-Maclaurin with the cut N pushed past s so the correction series
  // converges fast.
  const std::uint64_t cut =
      std::max<std::uint64_t>(m, static_cast<std::uint64_t>(std::ceil(s)) + 24);
  double head = 0.0;
  for (std::uint64_t k = cut; k-- > m;) head += std::pow(static_cast<double>(k), -s);
  const double n = static_cast<double>(cut);
  const double n_pow = std::pow(n, -s);
  double tail = n * n_pow / (s - 1.0) + 0.5 * n_pow;
  // Rising factorial s (s+1) ... (s+2j-2) times N^(-s-2j+1).
  double factor = s * n_pow / n;
  for (int j = 0; j < 7; ++j) {
    tail += kBernoulliOverFactorial[j] * factor;
    factor *= (s + 2 * j + 1) * (s + 2 * j + 2) / (n * n);
  }
  return head + tail;
}

ZetaBounds truncated_zeta_bounds(double s, std::uint64_t m) {
  if (!(s > 1.0) || m == 0) {
    throw Error(ErrorCode::kDomainError, "zeta bounds need s > 1, m >= 1");
  }
  const double integral = std::pow(static_cast<double>(m), 1.0 - s) / (s - 1.0);
  return {integral, 1.0 + integral};
}

double poisson_log_pmf(double mean, std::uint64_t k) {
  if (mean <= 0.0) return k == 0 ? 0.0 : -INFINITY;
  const double kd = static_cast<double>(k);
  return kd * std::log(mean) - mean - std::lgamma(kd + 1.0);
}

double poisson_pmf(double mean, std::uint64_t k) {
  return std::exp(poisson_log_pmf(mean, k));
}

double poisson_cdf(double mean, std::uint64_t k) {
  if (mean <= 0.0) return 1.0;
  return boost::math::gamma_q(static_cast<double>(k) + 1.0, mean);
}

double poisson_tail(double mean, std::uint64_t k) {
  if (k == 0) return 1.0;
  if (mean <= 0.0) return 0.0;
  return boost::math::gamma_p(static_cast<double>(k), mean);
}

}  // namespace fbl
