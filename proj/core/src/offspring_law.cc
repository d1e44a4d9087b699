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

#include "fbl/offspring_law.h"

#include <algorithm>
#include <cmath>
#include <numeric>

#include <boost/math/distributions/binomial.hpp>
#include <boost/math/distributions/negative_binomial.hpp>

#include "fbl/error.h"
#include "fbl/format.h"
#include "fbl/special_functions.h"

namespace fbl {

namespace {

double binomial_coefficient(int n, int k) {
  double c = 1.0;
  for (int i = 1; i <= k; ++i) c = c * (n - k + i) / i;
  return c;
}

void require(bool ok, const std::string& what) {
  if (!ok) throw Error(ErrorCode::kInvalidArgument, what);
}

}  // namespace

OffspringLaw OffspringLaw::poisson(double mean) {
  require(mean >= 0.0 && std::isfinite(mean), "poisson mean must be >= 0");
  OffspringLaw law;
  law.kind_ = Kind::kPoisson;
  law.a_ = mean;
  return law;
}

OffspringLaw OffspringLaw::zeta(double tau) {
  return shifted_zeta(tau, 0);
}

OffspringLaw OffspringLaw::shifted_zeta(double s, std::uint64_t shift) {
  if (!(s > 1.0)) throw Error(ErrorCode::kTauOutOfRange, "zeta law needs s > 1");
  OffspringLaw law;
  law.kind_ = shift == 0 ? Kind::kZeta : Kind::kShiftedZeta;
  law.a_ = s;
  law.n_ = shift;
  law.zeta_norm_ = riemann_zeta(s);
  return law;
}

OffspringLaw OffspringLaw::point_mass(std::uint64_t k) {
  OffspringLaw law;
  law.kind_ = Kind::kPointMass;
  law.n_ = k;
  return law;
}

OffspringLaw OffspringLaw::bimodal(double p, std::uint64_t m1, std::uint64_t m2) {
  require(p > 0.0 && p < 1.0, "bimodal p must lie in (0, 1)");
  return table({m1, m2}, {p, 1.0 - p});
}

OffspringLaw OffspringLaw::binomial(std::uint64_t n, double p) {
  require(p >= 0.0 && p <= 1.0, "binomial p must lie in [0, 1]");
  OffspringLaw law;
  law.kind_ = Kind::kBinomial;
  law.n_ = n;
  law.a_ = p;
  return law;
}

OffspringLaw OffspringLaw::geometric(double q) {
  require(q >= 0.0 && q < 1.0, "geometric q must lie in [0, 1)");
  return negative_binomial(1.0, 1.0 - q);
}

OffspringLaw OffspringLaw::negative_binomial(double r, double p) {
  require(r > 0.0 && p > 0.0 && p <= 1.0, "negative binomial needs r > 0, p in (0, 1]");
  OffspringLaw law;
  law.kind_ = Kind::kNegativeBinomial;
  law.a_ = r;
  law.b_ = p;
  return law;
}

OffspringLaw OffspringLaw::table(std::vector<std::uint64_t> values,
                                 std::vector<double> probs) {
  require(!values.empty() && values.size() == probs.size(),
          "table needs matching, non-empty value and probability lists");
  std::vector<std::size_t> order(values.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](std::size_t x, std::size_t y) { return values[x] < values[y]; });
  OffspringLaw law;
  law.kind_ = Kind::kTable;
  double total = 0.0;
  for (std::size_t idx : order) {
    require(probs[idx] >= 0.0 && std::isfinite(probs[idx]),
            "table probabilities must be >= 0");
    if (probs[idx] == 0.0) continue;
    total += probs[idx];
    if (!law.values_.empty() && law.values_.back() == values[idx]) {
      law.probs_.back() += probs[idx];
    } else {
      law.values_.push_back(values[idx]);
      law.probs_.push_back(probs[idx]);
    }
  }
  require(total > 0.0, "table has no mass");
  double running = 0.0;
  for (double& p : law.probs_) {
    p /= total;
    running += p;
    law.cumulative_.push_back(running);
  }
  law.cumulative_.back() = 1.0;
  return law;
}

double OffspringLaw::pmf(std::uint64_t k) const {
  switch (kind_) {
    case Kind::kPoisson:
      return poisson_pmf(a_, k);
    case Kind::kZeta:
    case Kind::kShiftedZeta: {
      const double z = static_cast<double>(k) + static_cast<double>(n_);
      return z < 1.0 ? 0.0 : std::pow(z, -a_) / zeta_norm_;
    }
    case Kind::kPointMass:
      return k == n_ ? 1.0 : 0.0;
    case Kind::kBinomial:
      if (k > n_) return 0.0;
      return boost::math::pdf(
          boost::math::binomial_distribution<>(static_cast<double>(n_), a_),
          static_cast<double>(k));
    case Kind::kNegativeBinomial:
      return boost::math::pdf(boost::math::negative_binomial_distribution<>(a_, b_),
                              static_cast<double>(k));
    case Kind::kTable: {
      auto it = std::lower_bound(values_.begin(), values_.end(), k);
      return (it != values_.end() && *it == k) ? probs_[it - values_.begin()] : 0.0;
    }
  }
  return 0.0;
}

double OffspringLaw::tail(std::uint64_t k) const {
  if (k == 0) return 1.0;
  switch (kind_) {
    case Kind::kPoisson:
      return poisson_tail(a_, k);
    case Kind::kZeta:
    case Kind::kShiftedZeta:
      return std::min(1.0, hurwitz_zeta(a_, std::max<std::uint64_t>(k + n_, 1)) / zeta_norm_);
    case Kind::kPointMass:
      return n_ >= k ? 1.0 : 0.0;
    case Kind::kBinomial:
      if (k > n_) return 0.0;
      return boost::math::cdf(boost::math::complement(
          boost::math::binomial_distribution<>(static_cast<double>(n_), a_),
          static_cast<double>(k - 1)));
    case Kind::kNegativeBinomial:
      return boost::math::cdf(boost::math::complement(
          boost::math::negative_binomial_distribution<>(a_, b_),
          static_cast<double>(k - 1)));
    case Kind::kTable: {
      auto it = std::lower_bound(values_.begin(), values_.end(), k);
      double upper = 0.0;
      for (auto j = static_cast<std::size_t>(it - values_.begin()); j < probs_.size(); ++j) {
        upper += probs_[j];
      }
      return std::min(1.0, upper);
    }
  }
  return 0.0;
}

double OffspringLaw::cdf(std::uint64_t k) const {
  switch (kind_) {
    case Kind::kPoisson:
      return poisson_cdf(a_, k);
    case Kind::kBinomial:
      return k >= n_ ? 1.0
                     : boost::math::cdf(boost::math::binomial_distribution<>(
                                            static_cast<double>(n_), a_),
                                        static_cast<double>(k));
    case Kind::kNegativeBinomial:
      return boost::math::cdf(boost::math::negative_binomial_distribution<>(a_, b_),
                              static_cast<double>(k));
    case Kind::kTable: {
      auto it = std::upper_bound(values_.begin(), values_.end(), k);
      return it == values_.begin() ? 0.0 : cumulative_[it - values_.begin() - 1];
    }
    default:
      return 1.0 - tail(k + 1);
  }
}

Count OffspringLaw::sample(Rng& rng) const {
  switch (kind_) {
    case Kind::kPoisson:
      return sample_poisson(rng, a_);
    case Kind::kZeta:
      return sample_zeta(rng, a_);
    case Kind::kShiftedZeta:
      return sample_zeta(rng, a_) - n_;
    case Kind::kPointMass:
      return n_;
    case Kind::kBinomial: {
      std::binomial_distribution<std::int64_t> dist(static_cast<std::int64_t>(n_), a_);
      return static_cast<Count>(dist(rng));
    }
    case Kind::kNegativeBinomial:
      // Gamma-Poisson mixture; valid for real r.
      if (b_ == 1.0) return 0;
      return sample_poisson(rng, sample_gamma(rng, a_) * (1.0 - b_) / b_);
    case Kind::kTable: {
      const double u = rng.uniform();
      auto it = std::upper_bound(cumulative_.begin(), cumulative_.end(), u);
      if (it == cumulative_.end()) --it;
      return values_[it - cumulative_.begin()];
    }
  }
  return 0;
}

double OffspringLaw::moment(int order) const {
  require(order >= 0, "moment order must be >= 0");
  if (order == 0) return 1.0;
  const double r = static_cast<double>(order);
  switch (kind_) {
    case Kind::kPoisson: {
      // Touchard polynomials for the first three orders.
      const double l = a_;
      if (order == 1) return l;
      if (order == 2) return l * l + l;
      if (order == 3) return l * l * l + 3 * l * l + l;
      break;
    }
    case Kind::kZeta:
    case Kind::kShiftedZeta: {
      if (a_ - r <= 1.0) return INFINITY;
      // E[(Z - c)^r] = sum_j C(r, j) (-c)^(r-j) E[Z^j].
      const double c = static_cast<double>(n_);
      double total = 0.0;
      for (int j = 0; j <= order; ++j) {
        const double ez = j == 0 ? 1.0 : riemann_zeta(a_ - j) / zeta_norm_;
        total += binomial_coefficient(order, j) * std::pow(-c, order - j) * ez;
      }
      return total;
    }
    case Kind::kPointMass:
      return std::pow(static_cast<double>(n_), r);
    case Kind::kTable: {
      double total = 0.0;
      for (std::size_t i = 0; i < values_.size(); ++i) {
        total += probs_[i] * std::pow(static_cast<double>(values_[i]), r);
      }
      return total;
    }
    default:
      break;
  }
  // Light-tailed laws: direct series up to a negligible tail.
  const auto cut = truncation_point(1e-20, std::uint64_t{1} << 32);
  if (!cut) throw Error(ErrorCode::kTruncationFailure, "moment series does not truncate");
  double total = 0.0;
  for (std::uint64_t k = *cut + 1; k-- > 1;) {
    total += pmf(k) * std::pow(static_cast<double>(k), r);
  }
  return total;
}

double OffspringLaw::inverse_moment() const {
  if (has_mass_at_zero()) {
    throw Error(ErrorCode::kZeroMass, "E[1/X] needs a law without mass at 0");
  }
  switch (kind_) {
    case Kind::kZeta:
      return riemann_zeta(a_ + 1.0) / zeta_norm_;
    case Kind::kPointMass:
      return 1.0 / static_cast<double>(n_);
    case Kind::kTable: {
      double total = 0.0;
      for (std::size_t i = 0; i < values_.size(); ++i) {
        total += probs_[i] / static_cast<double>(values_[i]);
      }
      return total;
    }
    default:
      break;
  }
  const auto cut = truncation_point(1e-17, std::uint64_t{1} << 32);
  if (!cut) throw Error(ErrorCode::kTruncationFailure, "E[1/X] series does not truncate");
  double total = 0.0;
  for (std::uint64_t k = *cut + 1; k-- > 1;) total += pmf(k) / static_cast<double>(k);
  return total;
}

std::optional<std::uint64_t> OffspringLaw::truncation_point(double eps,
                                                            std::uint64_t cap) const {
  switch (kind_) {
    case Kind::kPointMass:
      return n_;
    case Kind::kBinomial:
      return n_;
    case Kind::kTable:
      return values_.back();
    default:
      break;
  }
  if (tail(1) <= eps) return 0;
  std::uint64_t hi = 1;
  while (tail(hi + 1) > eps) {
    if (hi > cap) return std::nullopt;
    hi *= 2;
  }
  std::uint64_t lo = hi / 2;  // tail(lo + 1) > eps
  while (hi - lo > 1) {
    const std::uint64_t mid = lo + (hi - lo) / 2;
    if (tail(mid + 1) <= eps) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  if (hi > cap) return std::nullopt;
  return hi;
}

OffspringLaw OffspringLaw::size_biased() const {
  switch (kind_) {
    case Kind::kPoisson:
      if (a_ == 0.0) break;
      return *this;
    case Kind::kZeta:
      if (a_ <= 2.0) {
        throw Error(ErrorCode::kTauOutOfRange, "size-biased zeta needs tau > 2");
      }
      return shifted_zeta(a_ - 1.0, 1);
    case Kind::kPointMass:
      if (n_ == 0) break;
      return point_mass(n_ - 1);
    case Kind::kBinomial:
      if (n_ == 0 || a_ == 0.0) break;
      return binomial(n_ - 1, a_);
    case Kind::kNegativeBinomial:
      if (b_ == 1.0) break;
      return negative_binomial(a_ + 1.0, b_);
    case Kind::kTable: {
      std::vector<std::uint64_t> values;
      std::vector<double> probs;
      for (std::size_t i = 0; i < values_.size(); ++i) {
        if (values_[i] == 0) continue;
        values.push_back(values_[i] - 1);
        probs.push_back(probs_[i] * static_cast<double>(values_[i]));
      }
      if (values.empty()) break;
      return table(values, probs);
    }
    case Kind::kShiftedZeta:
      throw Error(ErrorCode::kInvalidArgument,
                  "size-biasing a shifted zeta law is not supported");
  }
  throw Error(ErrorCode::kZeroMass, "size-biasing needs a positive mean");
}

std::string OffspringLaw::describe() const {
  switch (kind_) {
    case Kind::kPoisson:
      return "poisson:" + format_double(a_);
    case Kind::kZeta:
      return "zeta:" + format_double(a_);
    case Kind::kShiftedZeta:
      return "shifted-zeta:" + format_double(a_) + ":" + std::to_string(n_);
    case Kind::kPointMass:
      return "point:" + std::to_string(n_);
    case Kind::kBinomial:
      return "binomial:" + std::to_string(n_) + ":" + format_double(a_);
    case Kind::kNegativeBinomial:
      if (a_ == 1.0) return "geometric:" + format_double(1.0 - b_);
      return "negbinomial:" + format_double(a_) + ":" + format_double(b_);
    case Kind::kTable: {
      std::string out = "table";
      for (std::size_t i = 0; i < values_.size(); ++i) {
        out += ":" + std::to_string(values_[i]) + ":" + format_double(probs_[i]);
      }
      return out;
    }
  }
  return {};
}

OffspringLaw parse_law(const std::string& text) {
  std::vector<std::string_view> parts;
  std::string_view rest = text;
  while (true) {
    const auto colon = rest.find(':');
    parts.push_back(rest.substr(0, colon));
    if (colon == std::string_view::npos) break;
    rest.remove_prefix(colon + 1);
  }
  auto fail = [&]() -> OffspringLaw {
    throw Error(ErrorCode::kParseError, "bad law specification '" + text + "'");
  };
  auto real = [&](std::size_t i) {
    const auto v = parse_double(parts[i]);
    if (!v) fail();
    return *v;
  };
  auto count = [&](std::size_t i) {
    const auto v = parse_count(parts[i]);
    if (!v) fail();
    return *v;
  };
  const std::string_view name = parts[0];
  const std::size_t args = parts.size() - 1;
  try {
    if (name == "poisson" && args == 1) return OffspringLaw::poisson(real(1));
    if (name == "zeta" && args == 1) return OffspringLaw::zeta(real(1));
    if (name == "point" && args == 1) return OffspringLaw::point_mass(count(1));
    if (name == "bimodal" && args == 3) {
      return OffspringLaw::bimodal(real(1), count(2), count(3));
    }
    if (name == "binomial" && args == 2) return OffspringLaw::binomial(count(1), real(2));
    if (name == "geometric" && args == 1) return OffspringLaw::geometric(real(1));
    if ((name == "twopoint" && args == 4) ||
        (name == "table" && args >= 2 && args % 2 == 0)) {
      std::vector<std::uint64_t> values;
      std::vector<double> probs;
      for (std::size_t i = 1; i < parts.size(); i += 2) {
        values.push_back(count(i));
        probs.push_back(real(i + 1));
      }
      return OffspringLaw::table(values, probs);
    }
  } catch (const Error& e) {
    if (e.code() == ErrorCode::kParseError) throw;
    throw Error(ErrorCode::kParseError, "bad law '" + text + "': " + e.what());
  }
  return fail();
}

}  // namespace fbl
