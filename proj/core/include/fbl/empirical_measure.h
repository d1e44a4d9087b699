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

#ifndef FBL_EMPIRICAL_MEASURE_H_
#define FBL_EMPIRICAL_MEASURE_H_

#include <cstdint>
#include <span>
#include <vector>

namespace fbl {

struct Atom {
  double value;
  double weight;
};

// Finite measure on the real line given by weighted atoms, sorted by value
// with distinct values. Queries other than total() are normalised to a
// probability measure.
class EmpiricalMeasure {
 public:
  EmpiricalMeasure() = default;

  // Equal-weight atoms, one per sample; weights are count/N and total() is
  // exactly 1.
  static EmpiricalMeasure from_samples(std::span<const double> samples);
  // Arbitrary positive weights; equal values are merged.
  static EmpiricalMeasure from_atoms(std::vector<Atom> atoms);

  std::span<const Atom> atoms() const { return atoms_; }
  double total() const { return total_; }
  bool empty() const { return atoms_.empty(); }

  // P{X <= x} (right-continuous).
  double cdf(double x) const;
  // P{X >= x}.
  double tail(double x) const;
  double mean() const { return moment(1); }
  double moment(int order) const;

 private:
  std::vector<Atom> atoms_;
  // Prefix sums of normalised weights: cumulative_[i] = P{X <= atoms_[i]}.
  std::vector<double> cumulative_;
  double total_ = 0.0;

  void finalize();
};

// sup_x |F_a(x) - F_b(x)| over the merged atom grid.
double kolmogorov_distance(const EmpiricalMeasure& a, const EmpiricalMeasure& b);

}  // namespace fbl

#endif  // FBL_EMPIRICAL_MEASURE_H_
