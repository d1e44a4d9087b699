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

#ifndef FBL_ESTIMATION_H_
#define FBL_ESTIMATION_H_

#include <cstdint>
#include <iosfwd>
#include <string>
#include <variant>
#include <vector>

#include "fbl/empirical_measure.h"
#include "fbl/limit_trees.h"
#include "fbl/model_config.h"

namespace fbl {

struct TailCount {
  double x;
  double fraction;  // share of samples with bias >= x
};

struct SummaryStats {
  std::uint64_t n_samples = 0;
  double mean = 0.0;
  double second_moment = 0.0;
  double significance_fraction = 0.0;  // share of samples with bias >= 0
  double se_mean = 0.0;
  double se_second_moment = 0.0;
  double se_significance = 0.0;
  std::vector<TailCount> tail_counts;
  // degree_counts[k]: samples whose (root) degree is k; the last bin collects
  // everything at or above its index.
  std::vector<std::uint64_t> degree_counts;
};

inline constexpr std::size_t kDegreeBins = 256;
std::vector<double> default_tail_grid();

struct ExperimentOptions {
  unsigned threads = 0;  // 0: $FBL_THREADS, then hardware concurrency
  std::vector<double> tail_grid = default_tail_grid();
};

// Limit-tree sampler matching a model configuration.
class LimitModel {
 public:
  explicit LimitModel(const ModelConfig& config);
  DeltaDraw draw(Rng& rng) const;
  void sample(Rng& rng, LimitSample& out) const;

 private:
  std::variant<GwSampler, IerSampler, PolyaSampler> sampler_;
};

// Pools the biases of all vertices of `replicates` graphs of size n.
// Replicate r uses Rng::stream(master_seed, r).
SummaryStats run_graph_experiment(const ModelConfig& config, std::size_t n,
                                  std::uint64_t replicates, std::uint64_t master_seed,
                                  const ExperimentOptions& options = {});
// n_samples limit-tree draws in fixed batches; batch b uses
// Rng::stream(master_seed, b).
SummaryStats run_limit_experiment(const ModelConfig& config, std::uint64_t n_samples,
                                  std::uint64_t master_seed,
                                  const ExperimentOptions& options = {});

// Bias values (not summaries), for distributional comparisons.
std::vector<double> graph_bias_values(const ModelConfig& config, std::size_t n, Rng& rng);
std::vector<double> limit_bias_values(const ModelConfig& config, std::uint64_t n_samples,
                                      std::uint64_t master_seed, unsigned threads = 0);

struct TailFit {
  double slope = 0.0;
  double intercept = 0.0;
  double r2 = 0.0;
  double x_max = 0.0;
  std::size_t points = 0;
};
// Least squares of log P{X >= x} on log x over a 20-point geometric grid from
// x_min up to where about 20 samples remain. Throws kInsufficientTail when
// fewer than 10 grid points carry mass.
TailFit tail_exponent_fit(const EmpiricalMeasure& samples, double x_min);

struct ConvergenceRow {
  std::uint64_t n = 0;
  double kolmogorov = 0.0;  // mean over replicates
  double mean = 0.0;        // pooled
  double significance = 0.0;
};
std::vector<ConvergenceRow> convergence_study(const ModelConfig& config,
                                              const std::vector<std::uint64_t>& n_grid,
                                              std::uint64_t replicates,
                                              std::uint64_t master_seed,
                                              std::uint64_t tree_samples = 1000000,
                                              unsigned threads = 0);

// CSV output ("." decimal, RFC 4180 quoting).
std::string csv_field(const std::string& text);
void write_experiment_header(std::ostream& out);
void write_experiment_row(std::ostream& out, const ModelConfig& config, std::uint64_t n,
                          std::uint64_t replicates, const SummaryStats& stats);
void write_convergence_csv(std::ostream& out, const std::vector<ConvergenceRow>& rows);

}  // namespace fbl

#endif  // FBL_ESTIMATION_H_
