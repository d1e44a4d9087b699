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

#ifndef FBL_KERNEL_H_
#define FBL_KERNEL_H_

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include "fbl/rng.h"

namespace fbl {

inline constexpr std::size_t kDefaultQuadPoints = std::size_t{1} << 14;

// Positive bounded kernel f on [0, 1] in one of three representations:
// piecewise constant (breakpoints 0 = x_0 < ... < x_K = 1, K values),
// polynomial (coefficients c_0 + c_1 x + ...), or tabulated values on a grid
// 0 = x_0 < ... < x_K = 1 joined by linear interpolation.
class KernelFunction {
 public:
  enum class Kind { kPiecewiseConstant, kPolynomial, kTabulated };

  static KernelFunction constant(double c);
  static KernelFunction piecewise_constant(std::vector<double> breakpoints,
                                           std::vector<double> values);
  static KernelFunction polynomial(std::vector<double> coefficients);
  static KernelFunction tabulated(std::vector<double> xs, std::vector<double> ys);

  Kind kind() const { return kind_; }
  bool is_piecewise_constant() const { return kind_ == Kind::kPiecewiseConstant; }
  bool is_constant() const;

  double operator()(double x) const;
  // Certified bounds: M- <= f(x) <= M+ on [0, 1].
  double m_minus() const { return m_minus_; }
  double m_plus() const { return m_plus_; }

  // beta_m = int f^m. Exact for piecewise-constant and tabulated kernels;
  // composite midpoint rule with `quad_points` nodes for polynomials.
  double moment(double m, std::size_t quad_points = kDefaultQuadPoints) const;
  // int (f / M+)^m, which stays finite for large m.
  double moment_ratio(double m, std::size_t quad_points = kDefaultQuadPoints) const;
  // int g(f(x)) dx; exact for piecewise-constant kernels, midpoint otherwise.
  double integrate(const std::function<double(double)>& g,
                   std::size_t quad_points = kDefaultQuadPoints) const;
  // Lebesgue measure of {f = M+}.
  double plateau_measure() const;

  // Draw from the density f / beta_1: inversion for piecewise-constant
  // kernels, rejection against M+ otherwise.
  double sample_size_biased(Rng& rng) const;

  const std::vector<double>& breakpoints() const { return xs_; }
  const std::vector<double>& values() const { return ys_; }

  std::string describe() const;

 private:
  Kind kind_ = Kind::kPiecewiseConstant;
  std::vector<double> xs_;
  std::vector<double> ys_;
  // Piecewise constant: cumulative normalised mass per piece.
  std::vector<double> mass_cdf_;
  double m_minus_ = 1.0;
  double m_plus_ = 1.0;

  void finalize();
};

}  // namespace fbl

#endif  // FBL_KERNEL_H_
