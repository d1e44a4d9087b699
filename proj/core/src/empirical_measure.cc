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

#include "fbl/empirical_measure.h"

#include <algorithm>
#include <cmath>

#include "fbl/error.h"
#include "fbl/parallel.h"

namespace fbl {

EmpiricalMeasure EmpiricalMeasure::from_samples(std::span<const double> samples) {
  EmpiricalMeasure m;
  if (samples.empty()) return m;
  std::vector<double> sorted(samples.begin(), samples.end());
  std::sort(sorted.begin(), sorted.end());
  const double n = static_cast<double>(sorted.size());
  for (std::size_t i = 0; i < sorted.size();) {
    std::size_t j = i;
    while (j < sorted.size() && sorted[j] == sorted[i]) ++j;
    m.atoms_.push_back(Atom{sorted[i], static_cast<double>(j - i) / n});
    i = j;
  }
  m.finalize();
  m.total_ = 1.0;
  return m;
}

EmpiricalMeasure EmpiricalMeasure::from_atoms(std::vector<Atom> atoms) {
  for (const Atom& a : atoms) {
    if (!(a.weight > 0.0) || !std::isfinite(a.value)) {
      throw Error(ErrorCode::kInvalidArgument,
                  "atoms need finite values and positive weights");
    }
  }
  std::sort(atoms.begin(), atoms.end(),
            [](const Atom& x, const Atom& y) { return x.value < y.value; });
  EmpiricalMeasure m;
  for (const Atom& a : atoms) {
    if (!m.atoms_.empty() && m.atoms_.back().value == a.value) {
      m.atoms_.back().weight += a.weight;
    } else {
      m.atoms_.push_back(a);
    }
  }
  m.finalize();
  return m;
}

void EmpiricalMeasure::finalize() {
  std::vector<double> weights;
  weights.reserve(atoms_.size());
  for (const Atom& a : atoms_) weights.push_back(a.weight);
  total_ = pairwise_sum(weights);
  cumulative_.resize(atoms_.size());
  double running = 0.0;
  for (std::size_t i = 0; i < atoms_.size(); ++i) {
    running += atoms_[i].weight;
    cumulative_[i] = running / total_;
  }
  if (!cumulative_.empty()) cumulative_.back() = 1.0;
}

double EmpiricalMeasure::cdf(double x) const {
  auto it = std::upper_bound(atoms_.begin(), atoms_.end(), x,
                             [](double v, const Atom& a) { return v < a.value; });
  if (it == atoms_.begin()) return 0.0;
  return cumulative_[static_cast<std::size_t>(it - atoms_.begin()) - 1];
}

double EmpiricalMeasure::tail(double x) const {
  auto it = std::lower_bound(atoms_.begin(), atoms_.end(), x,
                             [](const Atom& a, double v) { return a.value < v; });
  if (it == atoms_.end()) return 0.0;
  const auto idx = static_cast<std::size_t>(it - atoms_.begin());
  // Sum the upper weights directly so tiny tails keep relative precision.
  double upper = 0.0;
  for (std::size_t i = atoms_.size(); i-- > idx;) upper += atoms_[i].weight;
  return std::min(1.0, upper / total_);
}

double EmpiricalMeasure::moment(int order) const {
  std::vector<double> terms;
  terms.reserve(atoms_.size());
  for (const Atom& a : atoms_) terms.push_back(a.weight * std::pow(a.value, order));
  return pairwise_sum(terms) / total_;
}

double kolmogorov_distance(const EmpiricalMeasure& a, const EmpiricalMeasure& b) {
  const auto xa = a.atoms();
  const auto xb = b.atoms();
  std::size_t i = 0;
  std::size_t j = 0;
  double fa = 0.0;
  double fb = 0.0;
  double sup = 0.0;
  const double ta = a.total();
  const double tb = b.total();
  double ca = 0.0;
  double cb = 0.0;
  while (i < xa.size() || j < xb.size()) {
    double x;
    if (j >= xb.size() || (i < xa.size() && xa[i].value <= xb[j].value)) {
      x = xa[i].value;
    } else {
      x = xb[j].value;
    }
    while (i < xa.size() && xa[i].value == x) ca += xa[i++].weight;
    while (j < xb.size() && xb[j].value == x) cb += xb[j++].weight;
    fa = i == xa.size() ? 1.0 : ca / ta;
    fb = j == xb.size() ? 1.0 : cb / tb;
    sup = std::max(sup, std::abs(fa - fb));
  }
  return sup;
}

}  // namespace fbl
