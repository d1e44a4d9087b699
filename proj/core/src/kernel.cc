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

#include "fbl/kernel.h"

#include <algorithm>
#include <cmath>

#include "fbl/error.h"
#include "fbl/format.h"

namespace fbl {

namespace {

void check_grid(const std::vector<double>& xs) {
  if (xs.size() < 2 || xs.front() != 0.0 || xs.back() != 1.0) {
    throw Error(ErrorCode::kKernelInvalid, "kernel grid must run from 0 to 1");
  }
  for (std::size_t i = 1; i < xs.size(); ++i) {
    if (!(xs[i] > xs[i - 1])) {
      throw Error(ErrorCode::kKernelInvalid, "kernel grid must be increasing");
    }
  }
}

// Exact int_0^h of (a + (b - a) t / h)^m dt.
double linear_power_integral(double a, double b, double h, double m) {
  if (std::abs(b - a) <= 1e-12 * std::max(a, b)) return h * std::pow(0.5 * (a + b), m);
  return h * (std::pow(b, m + 1) - std::pow(a, m + 1)) / ((m + 1) * (b - a));
}

}  // namespace

KernelFunction KernelFunction::constant(double c) {
  return piecewise_constant({0.0, 1.0}, {c});
}

KernelFunction KernelFunction::piecewise_constant(std::vector<double> breakpoints,
                                                  std::vector<double> values) {
  check_grid(breakpoints);
  if (values.size() + 1 != breakpoints.size()) {
    throw Error(ErrorCode::kKernelInvalid, "need one value per piece");
  }
  KernelFunction f;
  f.kind_ = Kind::kPiecewiseConstant;
  f.xs_ = std::move(breakpoints);
  f.ys_ = std::move(values);
  f.finalize();
  return f;
}

KernelFunction KernelFunction::polynomial(std::vector<double> coefficients) {
  if (coefficients.empty()) {
    throw Error(ErrorCode::kKernelInvalid, "polynomial needs coefficients");
  }
  KernelFunction f;
  f.kind_ = Kind::kPolynomial;
  f.ys_ = std::move(coefficients);
  f.finalize();
  return f;
}

KernelFunction KernelFunction::tabulated(std::vector<double> xs, std::vector<double> ys) {
  check_grid(xs);
  if (xs.size() != ys.size()) {
    throw Error(ErrorCode::kKernelInvalid, "need one value per grid point");
  }
  KernelFunction f;
  f.kind_ = Kind::kTabulated;
  f.xs_ = std::move(xs);
  f.ys_ = std::move(ys);
  f.finalize();
  return f;
}

void KernelFunction::finalize() {
  for (double y : ys_) {
    if (!std::isfinite(y)) throw Error(ErrorCode::kKernelInvalid, "non-finite kernel value");
  }
  if (kind_ == Kind::kPolynomial) {
    // Grid extremes padded by a Lipschitz bound cover the whole interval.
    constexpr int kGrid = 4096;
    double lipschitz = 0.0;
    for (std::size_t k = 1; k < ys_.size(); ++k) lipschitz += k * std::abs(ys_[k]);
    double lo = INFINITY;
    double hi = -INFINITY;
    for (int i = 0; i <= kGrid; ++i) {
      double v = 0.0;
      const double x = static_cast<double>(i) / kGrid;
      for (std::size_t k = ys_.size(); k-- > 0;) v = v * x + ys_[k];
      lo = std::min(lo, v);
      hi = std::max(hi, v);
    }
    const double pad = lipschitz * 0.5 / kGrid;
    m_minus_ = lo - pad;
    m_plus_ = hi + pad;
  } else {
    m_minus_ = *std::min_element(ys_.begin(), ys_.end());
    m_plus_ = *std::max_element(ys_.begin(), ys_.end());
  }
  if (!(m_minus_ > 0.0)) {
    throw Error(ErrorCode::kKernelInvalid, "kernel must be bounded away from 0");
  }
  if (kind_ == Kind::kPiecewiseConstant) {
    mass_cdf_.clear();
    double running = 0.0;
    for (std::size_t i = 0; i < ys_.size(); ++i) {
      running += ys_[i] * (xs_[i + 1] - xs_[i]);
      mass_cdf_.push_back(running);
    }
    for (double& c : mass_cdf_) c /= running;
    mass_cdf_.back() = 1.0;
  }
}

bool KernelFunction::is_constant() const {
  if (kind_ == Kind::kPolynomial) {
    return std::all_of(ys_.begin() + 1, ys_.end(), [](double c) { return c == 0.0; });
  }
  return m_minus_ == m_plus_;
}

double KernelFunction::operator()(double x) const {
  double v = 0.0;
  switch (kind_) {
    case Kind::kPiecewiseConstant: {
      auto it = std::upper_bound(xs_.begin(), xs_.end(), x);
      std::size_t idx = it == xs_.begin() ? 0 : static_cast<std::size_t>(it - xs_.begin()) - 1;
      v = ys_[std::min(idx, ys_.size() - 1)];
      break;
    }
    case Kind::kPolynomial:
      for (std::size_t k = ys_.size(); k-- > 0;) v = v * x + ys_[k];
      break;
    case Kind::kTabulated: {
      if (x <= 0.0) return ys_.front();
      if (x >= 1.0) return ys_.back();
      const auto idx = static_cast<std::size_t>(
          std::upper_bound(xs_.begin(), xs_.end(), x) - xs_.begin()) - 1;
      const double t = (x - xs_[idx]) / (xs_[idx + 1] - xs_[idx]);
      v = ys_[idx] + t * (ys_[idx + 1] - ys_[idx]);
      break;
    }
  }
  if (!(v >= m_minus_ && v <= m_plus_)) {
    throw Error(ErrorCode::kKernelInvalid, "kernel value outside [M-, M+]");
  }
  return v;
}

double KernelFunction::moment_ratio(double m, std::size_t quad_points) const {
  const double scale = 1.0 / m_plus_;
  double total = 0.0;
  switch (kind_) {
    case Kind::kPiecewiseConstant:
      for (std::size_t i = 0; i < ys_.size(); ++i) {
        total += (xs_[i + 1] - xs_[i]) * std::pow(ys_[i] * scale, m);
      }
      return total;
    case Kind::kTabulated:
      for (std::size_t i = 0; i + 1 < xs_.size(); ++i) {
        total += linear_power_integral(ys_[i] * scale, ys_[i + 1] * scale,
                                       xs_[i + 1] - xs_[i], m);
      }
      return total;
    case Kind::kPolynomial:
      return integrate([&](double y) { return std::pow(y * scale, m); }, quad_points);
  }
  return total;
}

double KernelFunction::moment(double m, std::size_t quad_points) const {
  if (kind_ == Kind::kPolynomial) {
    return integrate([m](double y) { return std::pow(y, m); }, quad_points);
  }
  return moment_ratio(m, quad_points) * std::pow(m_plus_, m);
}

double KernelFunction::integrate(const std::function<double(double)>& g,
                                 std::size_t quad_points) const {
  if (kind_ == Kind::kPiecewiseConstant) {
    double total = 0.0;
    for (std::size_t i = 0; i < ys_.size(); ++i) total += (xs_[i + 1] - xs_[i]) * g(ys_[i]);
    return total;
  }
  if (quad_points < 1) throw Error(ErrorCode::kInvalidArgument, "need quadrature points");
  const double h = 1.0 / static_cast<double>(quad_points);
  double total = 0.0;
  for (std::size_t i = 0; i < quad_points; ++i) {
    total += g((*this)((static_cast<double>(i) + 0.5) * h));
  }
  return total * h;
}

double KernelFunction::plateau_measure() const {
  double total = 0.0;
  switch (kind_) {
    case Kind::kPiecewiseConstant:
      for (std::size_t i = 0; i < ys_.size(); ++i) {
        if (ys_[i] == m_plus_) total += xs_[i + 1] - xs_[i];
      }
      return total;
    case Kind::kTabulated:
      for (std::size_t i = 0; i + 1 < xs_.size(); ++i) {
        if (ys_[i] == m_plus_ && ys_[i + 1] == m_plus_) total += xs_[i + 1] - xs_[i];
      }
      return total;
    case Kind::kPolynomial:
      return is_constant() ? 1.0 : 0.0;
  }
  return total;
}

double KernelFunction::sample_size_biased(Rng& rng) const {
  if (kind_ == Kind::kPiecewiseConstant) {
    const double u = rng.uniform();
    auto it = std::upper_bound(mass_cdf_.begin(), mass_cdf_.end(), u);
    if (it == mass_cdf_.end()) --it;
    const auto idx = static_cast<std::size_t>(it - mass_cdf_.begin());
    return xs_[idx] + rng.uniform() * (xs_[idx + 1] - xs_[idx]);
  }
  while (true) {
    const double x = rng.uniform();
    if (rng.uniform() * m_plus_ < (*this)(x)) return x;
  }
}

std::string KernelFunction::describe() const {
  std::string out;
  switch (kind_) {
    case Kind::kPiecewiseConstant:
      out = "pc";
      for (std::size_t i = 0; i < ys_.size(); ++i) {
        out += ":" + format_double(xs_[i + 1]) + "=" + format_double(ys_[i]);
      }
      return out;
    case Kind::kPolynomial:
      out = "poly";
      for (double c : ys_) out += ":" + format_double(c);
      return out;
    case Kind::kTabulated:
      out = "tab";
      for (std::size_t i = 0; i < xs_.size(); ++i) {
        out += ":" + format_double(xs_[i]) + "=" + format_double(ys_[i]);
      }
      return out;
  }
  return out;
}

}  // namespace fbl
