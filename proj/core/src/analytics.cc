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

#include "fbl/analytics.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <vector>

#include <boost/math/special_functions/gamma.hpp>

#include "fbl/error.h"
#include "fbl/limit_trees.h"
#include "fbl/parallel.h"
#include "fbl/special_functions.h"

namespace fbl {

namespace {

constexpr std::uint64_t kMcBatch = 4096;
// Child-law mass discarded when tabulating its pmf for convolution.
constexpr double kChildTrim = 1e-20;

void require_tol(double tol) {
  if (!(tol > 0.0)) throw Error(ErrorCode::kInvalidArgument, "tol must be > 0");
}

// sum_{k >= 1} P{Poisson(m) = k} / k, recursing out from the mode.
double poisson_inverse_moment(double m) {
  if (m <= 0.0) return 0.0;
  const double mode = std::max(1.0, std::floor(m));
  const double spread = 12.0 * std::sqrt(m) + 40.0;
  const auto k0 = static_cast<std::uint64_t>(mode);
  const double p0 = poisson_pmf(m, k0);
  double total = p0 / mode;
  double p = p0;
  const double k_hi = mode + spread;
  for (double k = mode + 1.0; k <= k_hi; k += 1.0) {
    p *= m / k;
    total += p / k;
  }
  p = p0;
  const double k_lo = std::max(1.0, mode - spread);
  for (double k = mode; k > k_lo; k -= 1.0) {
    p *= k / m;
    total += p / (k - 1.0);
  }
  return total;
}

// Integer threshold k(k-1) of the significance event for root degree k.
std::uint64_t threshold(std::uint64_t k) { return k * (k - 1); }

McEstimate proportion(std::uint64_t hits, std::uint64_t n) {
  McEstimate out;
  out.n_samples = n;
  out.estimate = static_cast<double>(hits) / static_cast<double>(n);
  out.std_err = std::sqrt(out.estimate * (1.0 - out.estimate) / static_cast<double>(n));
  return out;
}

double least_squares_slope(const std::vector<double>& x, const std::vector<double>& y) {
  const double n = static_cast<double>(x.size());
  const double mx = std::accumulate(x.begin(), x.end(), 0.0) / n;
  const double my = std::accumulate(y.begin(), y.end(), 0.0) / n;
  double sxy = 0.0;
  double sxx = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sxy += (x[i] - mx) * (y[i] - my);
    sxx += (x[i] - mx) * (x[i] - mx);
  }
  return sxy / sxx;
}

}  // namespace

SeriesResult gw_significance_exact(const OffspringLaw& root, const OffspringLaw& child,
                                   double tol) {
  require_tol(tol);
  const auto root_cut = root.truncation_point(tol / 2, std::uint64_t{1} << 16);
  if (!root_cut) {
    throw Error(ErrorCode::kTruncationFailure, "root law tail does not reach tol/2");
  }
  const std::uint64_t k_max = *root_cut;
  const double root_tail = root.tail(k_max + 1);
  SeriesResult out;
  out.terms_used = k_max + 1;
  if (k_max < 2) {
    out.value = 1.0;
    out.truncation_bound = root_tail;
    return out;
  }
  const auto child_cut = child.truncation_point(kChildTrim, std::uint64_t{1} << 24);
  if (!child_cut) {
    throw Error(ErrorCode::kTruncationFailure, "child law tail cannot be trimmed");
  }
  std::vector<double> c(*child_cut + 1);
  double child_mean = 0.0;
  for (std::size_t j = 0; j < c.size(); ++j) {
    c[j] = child.pmf(j);
    child_mean += static_cast<double>(j) * c[j];
  }
  std::vector<double> root_pmf(k_max + 1);
  for (std::uint64_t k = 0; k <= k_max; ++k) root_pmf[k] = root.pmf(k);

  const std::uint64_t t_max = threshold(k_max);
  std::uint64_t cut = std::min<std::uint64_t>(
      t_max, std::max<double>(64.0, 4.0 * (static_cast<double>(k_max) * child_mean + 10.0)));
  while (true) {
    // Distribution of S_k = d_1 + ... + d_k on [0, cut); exact there because
    // all summands are nonnegative.
    std::vector<double> cur{1.0};
    std::vector<double> next;
    double insignificant = 0.0;
    double error = root_tail + static_cast<double>(k_max) * kChildTrim;
    for (std::uint64_t k = 1; k <= k_max; ++k) {
      // S_k on [0, L) needs S_{k-1} on all of [0, L).
      const std::uint64_t need = std::max<std::uint64_t>(1, cut);
      next.assign(need, 0.0);
      for (std::size_t s = 0; s < need; ++s) {
        const std::size_t j_hi = std::min<std::size_t>(s, c.size() - 1);
        double acc = 0.0;
        for (std::size_t j = 0; j <= j_hi; ++j) {
          const std::size_t from = s - j;
          if (from < cur.size()) acc += c[j] * cur[from];
        }
        next[s] = acc;
      }
      cur.swap(next);
      if (k < 2) continue;
      const std::uint64_t t = threshold(k);
      const std::size_t upto = std::min<std::uint64_t>(t, cur.size());
      double below = 0.0;
      for (std::size_t s = 0; s < upto; ++s) below += cur[s];
      insignificant += root_pmf[k] * below;
      // Mass of S_k in [cut, t) is unresolved.
      if (t > cut) error += root_pmf[k] * std::max(0.0, 1.0 - below);
    }
    if (error <= tol) {
      out.value = 1.0 - insignificant;
      out.truncation_bound = error;
      return out;
    }
    if (cut >= t_max) {
      throw Error(ErrorCode::kTruncationFailure, "convolution bound cannot certify tol");
    }
    cut = std::min(t_max, cut * 2);
  }
}

SeriesResult her_significance(double lambda, double tol) {
  require_tol(tol);
  if (!(lambda > 0.0)) throw Error(ErrorCode::kInvalidArgument, "lambda must be > 0");
  const OffspringLaw law = OffspringLaw::poisson(lambda);
  const auto cut = law.truncation_point(std::min(tol / 2, 1e-30), std::uint64_t{1} << 40);
  if (!cut) throw Error(ErrorCode::kTruncationFailure, "Poisson tail does not truncate");
  // 1 minus the insignificant mass: sum_k P{d_phi = k} P{Poisson(lambda k) < k(k-1)}.
  double insignificant = 0.0;
  for (std::uint64_t k = 2; k <= *cut; ++k) {
    const double kd = static_cast<double>(k);
    insignificant += poisson_pmf(lambda, k) *
                     boost::math::gamma_q(static_cast<double>(threshold(k)), lambda * kd);
  }
  SeriesResult out;
  out.value = 1.0 - insignificant;
  out.truncation_bound = law.tail(*cut + 1);
  out.terms_used = *cut + 1;
  return out;
}

Moments her_moments(double lambda) {
  if (!(lambda > 0.0)) throw Error(ErrorCode::kInvalidArgument, "lambda must be > 0");
  const double e = std::exp(-lambda);
  Moments out;
  out.m1 = -std::expm1(-lambda) - lambda * e;
  out.m2 = lambda * (poisson_inverse_moment(lambda) + 1.0) -
           (lambda + 1.0) * (lambda + 1.0) * e + 1.0;
  return out;
}

double her_log_tail_asymptote(double lambda, double x) {
  if (!(lambda > 0.0)) throw Error(ErrorCode::kInvalidArgument, "lambda must be > 0");
  if (!(x > lambda * M_E)) {
    throw Error(ErrorCode::kDomainError, "tail asymptote needs x > lambda e");
  }
  return -0.5 * std::log(2.0 * M_PI * x) + std::log(lambda) - 2.0 * lambda -
         x * std::log(x / (lambda * M_E));
}

double her_tail_asymptote(double lambda, double x) {
  return std::exp(her_log_tail_asymptote(lambda, x));
}

McEstimate ier_significance_mc(double lambda, const KernelFunction& kernel,
                               std::uint64_t n_samples, std::uint64_t seed,
                               unsigned threads) {
  if (n_samples == 0) throw Error(ErrorCode::kInvalidArgument, "need at least one sample");
  const IerSampler sampler(lambda, kernel);
  const std::uint64_t batches = (n_samples + kMcBatch - 1) / kMcBatch;
  std::vector<std::uint64_t> hits(batches, 0);
  parallel_for(batches, resolve_threads(threads), [&](std::size_t b) {
    Rng rng = Rng::stream(seed, b);
    const std::uint64_t count = std::min(kMcBatch, n_samples - b * kMcBatch);
    std::uint64_t h = 0;
    for (std::uint64_t i = 0; i < count; ++i) h += sampler.draw(rng).nonneg ? 1 : 0;
    hits[b] = h;
  });
  return proportion(std::accumulate(hits.begin(), hits.end(), std::uint64_t{0}), n_samples);
}

double ier_limit_significance(const KernelFunction& kernel, std::size_t quad_points) {
  if (quad_points < 2 && !kernel.is_piecewise_constant()) {
    throw Error(ErrorCode::kInvalidArgument, "need at least two quadrature points");
  }
  // Atoms (value, Lebesgue weight) of the law of f(U).
  std::vector<std::pair<double, double>> atoms;
  if (kernel.is_piecewise_constant()) {
    const auto& xs = kernel.breakpoints();
    const auto& ys = kernel.values();
    for (std::size_t i = 0; i < ys.size(); ++i) atoms.emplace_back(ys[i], xs[i + 1] - xs[i]);
  } else {
    const double h = 1.0 / static_cast<double>(quad_points);
    for (std::size_t i = 0; i < quad_points; ++i) {
      atoms.emplace_back(kernel((static_cast<double>(i) + 0.5) * h), h);
    }
  }
  std::sort(atoms.begin(), atoms.end());
  double beta1 = 0.0;
  for (const auto& [v, w] : atoms) beta1 += v * w;
  // Walk groups of equal values from the top; `above` is the f-weighted
  // mass strictly greater than the current group.
  double above = 0.0;
  double total = 0.0;
  for (std::size_t i = atoms.size(); i > 0;) {
    std::size_t j = i;
    double group_weight = 0.0;
    double group_mass = 0.0;
    const double v = atoms[i - 1].first;
    while (j > 0 && atoms[j - 1].first == v) {
      group_weight += atoms[j - 1].second;
      group_mass += atoms[j - 1].first * atoms[j - 1].second;
      --j;
    }
    total += group_weight * (above + 0.5 * group_mass);
    above += group_mass;
    i = j;
  }
  return total / beta1;
}

double ier_limit_significance_lln(const KernelFunction& kernel, std::size_t quad_points) {
  const double cut = kernel.moment(2.0, quad_points) / kernel.moment(1.0, quad_points);
  auto score = [cut](double v) {
    if (std::abs(v - cut) <= 1e-12 * cut) return 0.5;
    return v < cut ? 1.0 : 0.0;
  };
  return kernel.integrate(score, quad_points);
}

Moments ier_moments(double lambda, const KernelFunction& kernel, std::size_t quad_points) {
  if (!(lambda > 0.0)) throw Error(ErrorCode::kInvalidArgument, "lambda must be > 0");
  if (quad_points < 2) throw Error(ErrorCode::kInvalidArgument, "need quadrature points");
  const double b1 = kernel.moment(1.0, quad_points);
  const double b2 = kernel.moment(2.0, quad_points);
  const double b3 = kernel.moment(3.0, quad_points);
  const double rate = lambda * b1;
  const double e = kernel.integrate([rate](double y) { return std::exp(-rate * y); },
                                    quad_points);
  const double inv = kernel.integrate(
      [rate](double y) { return poisson_inverse_moment(rate * y); }, quad_points);
  Moments out;
  out.m1 = 1.0 - (lambda * b2 + 1.0) * e + lambda * (b2 - b1 * b1);
  out.m2 = lambda * (b2 + lambda * (b1 * b3 - b2 * b2)) * inv -
           (lambda * lambda * b2 * b2 + 2.0 * lambda * b2 + 1.0) * e +
           lambda * lambda * (b2 * b2 - b2 * b1 * b1) + lambda * (2.0 * b2 - b1 * b1) + 1.0;
  return out;
}

Moments cm_moments(const OffspringLaw& law) {
  if (law.has_mass_at_zero()) {
    throw Error(ErrorCode::kZeroMass, "degree law must not charge 0");
  }
  const double e1 = law.moment(1);
  if (!std::isfinite(e1)) throw Error(ErrorCode::kDomainError, "E[D] must be finite");
  const double e2 = law.moment(2);
  const double e3 = law.moment(3);
  Moments out;
  const double var = e2 - e1 * e1;
  out.m1 = std::isfinite(e2) ? std::max(0.0, var) / e1 : INFINITY;
  if (!std::isfinite(e3)) {
    out.m2 = INFINITY;
  } else {
    out.m2 = ((e3 * e1 - e2 * e2) * law.inverse_moment() + e2 * var) / (e1 * e1);
    // A point mass gives exact cancellation up to rounding.
    if (var <= 1e-15 * e2) out.m2 = 0.0;
  }
  return out;
}

Interval zeta_cm_significance_bounds(double tau, std::uint64_t k_max) {
  if (!(tau > 2.0)) throw Error(ErrorCode::kTauOutOfRange, "tau must exceed 2");
  if (k_max == 0) throw Error(ErrorCode::kInvalidArgument, "k_max must be >= 1");
  const double s = tau - 1.0;
  const double z_tau = riemann_zeta(tau);
  const double z_s = riemann_zeta(s);
  // d_1 + 1 ~ zeta(tau - 1), so P{d_1 >= m} = zeta_{m+1}(tau - 1) / zeta(tau - 1).
  auto child_tail = [&](std::uint64_t m) { return hurwitz_zeta(s, m + 1) / z_s; };
  double lo = 0.0;
  double hi = 0.0;
  for (std::uint64_t k = 1; k <= k_max; ++k) {
    const double kd = static_cast<double>(k);
    const double p = std::pow(kd, -tau) / z_tau;
    lo += p * child_tail(threshold(k));
    hi += kd * p * child_tail(k - 1);
  }
  hi += hurwitz_zeta(tau, k_max + 1) / z_tau;
  return {lo, std::min(1.0, hi)};
}

double bimodal_significance(double p, std::uint64_t m1, std::uint64_t m2) {
  if (!(p > 0.0 && p < 1.0) || m1 < 1 || m1 > m2) {
    throw Error(ErrorCode::kInvalidArgument, "need 0 < p < 1 and 1 <= M1 <= M2");
  }
  if (m1 == m2) return 1.0;
  const double a = static_cast<double>(m1);
  const double b = static_cast<double>(m2);
  return p + (1.0 - p) * std::pow(b * (1.0 - p) / (a * p + b * (1.0 - p)), b);
}

double cm_tail_exponent(double tau) {
  if (!(tau > 2.0)) throw Error(ErrorCode::kTauOutOfRange, "tau must exceed 2");
  return tau - 2.0;
}

namespace {

void require_pam_delta(double delta) {
  if (!(delta > -1.0)) throw Error(ErrorCode::kDeltaOutOfRange, "delta must exceed -1");
}

double pam_log_constant(double delta) {
  return std::lgamma(3.0 + 2.0 * delta) - std::lgamma(1.0 + delta);
}

}  // namespace

double pam_root_pmf(double delta, std::uint64_t k) {
  require_pam_delta(delta);
  if (k == 0) return 0.0;
  const double kd = static_cast<double>(k);
  return std::exp(std::log(2.0 + delta) + pam_log_constant(delta) + std::lgamma(kd + delta) -
                  std::lgamma(kd + 3.0 + 2.0 * delta));
}

double pam_root_tail(double delta, std::uint64_t k) {
  require_pam_delta(delta);
  if (k <= 1) return 1.0;
  const double kd = static_cast<double>(k);
  return std::exp(pam_log_constant(delta) + std::lgamma(kd + delta) -
                  std::lgamma(kd + 2.0 + 2.0 * delta));
}

SeriesResult pam_inverse_root_degree(double delta, double tol) {
  require_pam_delta(delta);
  require_tol(tol);
  constexpr std::uint64_t kMaxTerms = std::uint64_t{1} << 28;
  double pmf = pam_root_pmf(delta, 1);
  double sum = 0.0;
  std::uint64_t k = 1;
  std::uint64_t check = 64;
  while (true) {
    sum += pmf / static_cast<double>(k);
    pmf *= (static_cast<double>(k) + delta) / (static_cast<double>(k) + 3.0 + 2.0 * delta);
    ++k;
    if (k == check) {
      // Remaining terms are at most P{d_phi >= k} / k.
      const double bound = pam_root_tail(delta, k) / static_cast<double>(k);
      if (bound <= tol) return {sum, bound, k - 1};
      if (k > kMaxTerms) {
        throw Error(ErrorCode::kTruncationFailure, "E[1/d_phi] series too slow");
      }
      check *= 2;
    }
  }
}

PamMean pam_mean_interval(double delta, double tol) {
  require_pam_delta(delta);
  PamMean out;
  if (delta <= 0.0) {
    out.infinite = true;
    out.interval = {INFINITY, INFINITY};
    return out;
  }
  const SeriesResult p = pam_inverse_root_degree(delta, tol);
  out.p_delta = p.value;
  const double scale = (2.0 + delta) / delta;
  // Both endpoints increase with p_delta, which lies in [value, value + bound].
  out.interval.lo = scale * (0.5 + p.value) - (1.0 - p.value);
  out.interval.hi = scale * (0.5 + p.value + p.truncation_bound);
  return out;
}

bool pam_second_moment_finite(double delta) {
  require_pam_delta(delta);
  return delta > 1.0;
}

TailExponents pam_tail_exponents(double delta) {
  require_pam_delta(delta);
  TailExponents out;
  out.lower_exp = delta < 0.0 ? 5.0 + 3.0 * delta : 5.0 + 2.0 * delta;
  if (delta >= -0.5 && delta < 0.0) {
    out.upper_exp = -delta;
  } else if (delta == 0.0) {
    out.upper_exp = 1.0;
  } else if (delta > 0.0) {
    out.upper_exp = delta;
  }
  return out;
}

McEstimate pam_significance_lower_bound(double delta, std::uint64_t k_max,
                                        std::uint64_t samples_per_k, std::uint64_t seed,
                                        unsigned threads) {
  require_pam_delta(delta);
  if (k_max == 0 || samples_per_k == 0) {
    throw Error(ErrorCode::kInvalidArgument, "need k_max >= 1 and samples_per_k >= 1");
  }
  const PolyaSampler sampler(delta);
  std::vector<std::uint64_t> hits(k_max + 1, 0);
  parallel_for(k_max, resolve_threads(threads), [&](std::size_t idx) {
    const std::uint64_t k = idx + 1;
    if (k == 1) {
      hits[k] = samples_per_k;  // d_1 >= 0 always
      return;
    }
    Rng rng = Rng::stream(seed, k);
    std::uint64_t h = 0;
    for (std::uint64_t i = 0; i < samples_per_k; ++i) {
      h += sampler.old_child_offspring_given_root_degree(k, rng) >= threshold(k) ? 1 : 0;
    }
    hits[k] = h;
  });
  McEstimate out;
  out.n_samples = k_max * samples_per_k;
  double var = 0.0;
  for (std::uint64_t k = 1; k <= k_max; ++k) {
    const double w = pam_root_pmf(delta, k);
    const double p = static_cast<double>(hits[k]) / static_cast<double>(samples_per_k);
    out.estimate += w * p;
    var += w * w * p * (1.0 - p) / static_cast<double>(samples_per_k);
  }
  out.std_err = std::sqrt(var);
  return out;
}

SeriesResult conjecture_probability(const OffspringLaw& law, double tol) {
  return gw_significance_exact(law, law, tol);
}

BetaAsymptote ier_beta_x_asymptote(const KernelFunction& kernel, BetaCase which,
                                   std::optional<double> alpha) {
  const double plateau = kernel.plateau_measure();
  BetaAsymptote out;
  if (which == BetaCase::kFlatMax) {
    if (!(plateau > 0.0)) {
      throw Error(ErrorCode::kCaseMismatch, "kernel has no plateau at its maximum");
    }
    out.growth_law = "beta_x ~ M+^x";
    out.predicted = plateau;
    out.fitted = kernel.moment_ratio(1e4);
    return out;
  }
  if (!alpha || !(*alpha > 0.0)) {
    throw Error(ErrorCode::kCaseMismatch, "power-law peak needs alpha > 0");
  }
  if (plateau > 0.0) {
    throw Error(ErrorCode::kCaseMismatch, "kernel is flat at its maximum");
  }
  out.growth_law = "beta_x ~ x^(-1/alpha) M+^x";
  out.predicted = -1.0 / *alpha;
  // Midpoint quadrature cannot resolve very narrow peaks, so polynomial
  // kernels use a shorter range.
  const bool exact = kernel.kind() != KernelFunction::Kind::kPolynomial;
  const double x_lo = exact ? 1e2 : 1e1;
  const double x_hi = exact ? 1e5 : 1e3;
  const std::size_t points = exact ? kDefaultQuadPoints : std::size_t{1} << 18;
  std::vector<double> lx;
  std::vector<double> ly;
  constexpr int kGrid = 20;
  for (int i = 0; i < kGrid; ++i) {
    const double x = x_lo * std::pow(x_hi / x_lo, static_cast<double>(i) / (kGrid - 1));
    lx.push_back(std::log(x));
    ly.push_back(std::log(kernel.moment_ratio(x, points)));
  }
  out.fitted = least_squares_slope(lx, ly);
  return out;
}

}  // namespace fbl
