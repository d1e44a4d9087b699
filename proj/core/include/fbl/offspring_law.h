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

#ifndef FBL_OFFSPRING_LAW_H_
#define FBL_OFFSPRING_LAW_H_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "fbl/rng.h"
#include "fbl/variates.h"

namespace fbl {

// Probability law on the nonnegative integers.
class OffspringLaw {
 public:
  enum class Kind {
    kPoisson,
    kZeta,          // P{k} = k^-s / zeta(s), k >= 1
    kShiftedZeta,   // Z - shift with Z ~ zeta(s)
    kPointMass,
    kBinomial,
    kNegativeBinomial,  // failures before r successes, success prob p
    kTable,
  };

  static OffspringLaw poisson(double mean);
  static OffspringLaw zeta(double tau);
  static OffspringLaw shifted_zeta(double s, std::uint64_t shift);
  static OffspringLaw point_mass(std::uint64_t k);
  // Mass p at m1, 1 - p at m2.
  static OffspringLaw bimodal(double p, std::uint64_t m1, std::uint64_t m2);
  static OffspringLaw binomial(std::uint64_t n, double p);
  // pmf (1 - q) q^k on k >= 0.
  static OffspringLaw geometric(double q);
  static OffspringLaw negative_binomial(double r, double p);
  // Arbitrary finite law; probs are normalised.
  static OffspringLaw table(std::vector<std::uint64_t> values,
                            std::vector<double> probs);

  Kind kind() const { return kind_; }
  double pmf(std::uint64_t k) const;
  // P{X <= k}.
  double cdf(std::uint64_t k) const;
  // P{X >= k}.
  double tail(std::uint64_t k) const;
  Count sample(Rng& rng) const;

  double mean() const { return moment(1); }
  // E[X^order]; +inf when the series diverges.
  double moment(int order) const;
  // E[1/X]; requires no mass at 0.
  double inverse_moment() const;
  bool has_mass_at_zero() const { return pmf(0) > 0.0; }

  // Smallest K with tail(K + 1) <= eps, or nullopt when K would exceed `cap`.
  std::optional<std::uint64_t> truncation_point(double eps,
                                                std::uint64_t cap) const;

  // p*_k = (k+1) p_{k+1} / E[X].
  OffspringLaw size_biased() const;

  // Canonical textual form, e.g. "poisson:2".
  std::string describe() const;

 private:
  Kind kind_ = Kind::kPointMass;
  double a_ = 0.0;
  double b_ = 0.0;
  std::uint64_t n_ = 0;
  double zeta_norm_ = 1.0;
  std::vector<std::uint64_t> values_;
  std::vector<double> probs_;
  std::vector<double> cumulative_;
};

// Parses "poisson:2", "zeta:3.5", "point:3", "bimodal:0.1:9:10",
// "binomial:10:0.5", "geometric:0.5", "twopoint:1:0.2:20:0.8" or
// "table:v:p:v:p:...". Throws kParseError.
OffspringLaw parse_law(const std::string& text);

}  // namespace fbl

#endif  // FBL_OFFSPRING_LAW_H_
