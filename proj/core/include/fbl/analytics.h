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

#ifndef FBL_ANALYTICS_H_
#define FBL_ANALYTICS_H_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>

#include "fbl/kernel.h"
#include "fbl/offspring_law.h"

namespace fbl {

// A truncated series value; the infinite sum lies within truncation_bound.
struct SeriesResult {
  double value = 0.0;
  double truncation_bound = 0.0;
  std::uint64_t terms_used = 0;
};

struct Interval {
  double lo = 0.0;
  double hi = 0.0;
};

// First and second moment of the limiting bias; may be +inf.
struct Moments {
  double m1 = 0.0;
  double m2 = 0.0;
};

struct McEstimate {
  double estimate = 0.0;
  double std_err = 0.0;
  std::uint64_t n_samples = 0;
};

// mu([0, inf)) for the two-law tree: sum_k root(k) P{d_1 + ... + d_k >= k(k-1)}
// with d_j i.i.d. from `child`, by iterated convolution.
SeriesResult gw_significance_exact(const OffspringLaw& root, const OffspringLaw& child,
                                   double tol);

// Same quantity for Poisson(lambda) root and children, via the regularised
// incomplete gamma function.
SeriesResult her_significance(double lambda, double tol = 1e-12);
Moments her_moments(double lambda);
// Asymptotic tail lambda e^(-2 lambda) exp(-x log(x / (lambda e))) / sqrt(2 pi x);
// throws kDomainError for x <= lambda e.
double her_tail_asymptote(double lambda, double x);
double her_log_tail_asymptote(double lambda, double x);

// Monte Carlo estimate of mu([0, inf)) for the inhomogeneous model by direct
// simulation of the limit tree. Independent of `threads`.
McEstimate ier_significance_mc(double lambda, const KernelFunction& kernel,
                               std::uint64_t n_samples, std::uint64_t seed,
                               unsigned threads = 0);
// P{f(Q) < f(Q')} + P{f(Q) = f(Q')} / 2 with Q uniform and Q' of density
// f / beta_1. Exact for piecewise-constant kernels.
double ier_limit_significance(const KernelFunction& kernel,
                              std::size_t quad_points = kDefaultQuadPoints);
// P{f(Q) < beta_2 / beta_1} + P{f(Q) = beta_2 / beta_1} / 2: the large-lambda
// limit obtained when the d_phi neighbour types are averaged individually.
double ier_limit_significance_lln(const KernelFunction& kernel,
                                  std::size_t quad_points = kDefaultQuadPoints);
Moments ier_moments(double lambda, const KernelFunction& kernel,
                    std::size_t quad_points = kDefaultQuadPoints);

// Var(D)/E[D] and the matching second moment; m2 is +inf when E[D^3] is.
Moments cm_moments(const OffspringLaw& law);
// Bounds on mu([0, inf)) for zeta(tau) degrees:
//   lo = sum_{k<=k_max} p_k P{d_1 >= k(k-1)}
//   hi = min(1, sum_{k<=k_max} k p_k P{d_1 >= k-1} + P{D > k_max}).
Interval zeta_cm_significance_bounds(double tau, std::uint64_t k_max = 200);
double bimodal_significance(double p, std::uint64_t m1, std::uint64_t m2);
double cm_tail_exponent(double tau);

// Root-degree law of the Polya point tree.
double pam_root_pmf(double delta, std::uint64_t k);
// P{d_phi >= k} in closed form.
double pam_root_tail(double delta, std::uint64_t k);
// p_delta = E[1 / d_phi].
SeriesResult pam_inverse_root_degree(double delta, double tol);

struct PamMean {
  bool infinite = false;
  Interval interval;
  double p_delta = 0.0;
};
PamMean pam_mean_interval(double delta, double tol = 1e-12);
bool pam_second_moment_finite(double delta);

struct TailExponents {
  double lower_exp = 0.0;
  std::optional<double> upper_exp;
};
TailExponents pam_tail_exponents(double delta);

// sum_{k<=k_max} P{d_phi = k} P{d_1 >= k(k-1) | d_phi = k}, with the
// conditional probabilities estimated from `samples_per_k` draws each.
McEstimate pam_significance_lower_bound(double delta, std::uint64_t k_max,
                                        std::uint64_t samples_per_k, std::uint64_t seed,
                                        unsigned threads = 0);

// P{sum_{i=1}^{X_0} X_i >= X_0 (X_0 - 1)} for i.i.d. X_i from `law`.
SeriesResult conjecture_probability(const OffspringLaw& law, double tol);

enum class BetaCase { kFlatMax, kAlphaPower };

struct BetaAsymptote {
  std::string growth_law;
  // Flat maximum: predicted and computed limit of beta_x / M+^x.
  // Power-law peak: predicted (-1/alpha) and fitted log-log slope.
  double predicted = 0.0;
  double fitted = 0.0;
};
// Throws kCaseMismatch when the kernel shape contradicts the case.
BetaAsymptote ier_beta_x_asymptote(const KernelFunction& kernel, BetaCase which,
                                   std::optional<double> alpha = std::nullopt);

}  // namespace fbl

#endif  // FBL_ANALYTICS_H_
