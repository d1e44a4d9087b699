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

#include "fbl/estimation.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <ostream>

#include "fbl/error.h"
#include "fbl/format.h"
#include "fbl/friendship_bias.h"
#include "fbl/parallel.h"

namespace fbl {

namespace {

constexpr std::uint64_t kBatch = 4096;

// Sufficient statistics of one fixed batch of samples.
struct Partial {
  std::uint64_t n = 0;
  double sum = 0.0;
  double sum2 = 0.0;
  double sum4 = 0.0;
  std::uint64_t nonneg = 0;
  std::vector<std::uint64_t> tail;
  std::vector<std::uint64_t> degrees;

  explicit Partial(std::size_t tail_points) : tail(tail_points, 0), degrees(kDegreeBins, 0) {}

  void add(double delta, bool is_nonneg, std::uint64_t degree,
           const std::vector<double>& grid) {
    ++n;
    sum += delta;
    const double sq = delta * delta;
    sum2 += sq;
    sum4 += sq * sq;
    nonneg += is_nonneg ? 1 : 0;
    for (std::size_t i = 0; i < grid.size(); ++i) tail[i] += delta >= grid[i] ? 1 : 0;
    ++degrees[std::min<std::uint64_t>(degree, kDegreeBins - 1)];
  }
};

SummaryStats reduce(const std::vector<Partial>& parts, const std::vector<double>& grid) {
  SummaryStats out;
  std::vector<double> sums;
  std::vector<double> sums2;
  std::vector<double> sums4;
  sums.reserve(parts.size());
  out.degree_counts.assign(kDegreeBins, 0);
  std::vector<std::uint64_t> tail(grid.size(), 0);
  std::uint64_t nonneg = 0;
  for (const Partial& p : parts) {
    out.n_samples += p.n;
    sums.push_back(p.sum);
    sums2.push_back(p.sum2);
    sums4.push_back(p.sum4);
    nonneg += p.nonneg;
    for (std::size_t i = 0; i < tail.size(); ++i) tail[i] += p.tail[i];
    for (std::size_t k = 0; k < kDegreeBins; ++k) out.degree_counts[k] += p.degrees[k];
  }
  if (out.n_samples == 0) return out;
  const double n = static_cast<double>(out.n_samples);
  out.mean = pairwise_sum(sums) / n;
  out.second_moment = pairwise_sum(sums2) / n;
  const double fourth = pairwise_sum(sums4) / n;
  out.significance_fraction = static_cast<double>(nonneg) / n;
  out.se_mean = std::sqrt(std::max(0.0, out.second_moment - out.mean * out.mean) / n);
  out.se_second_moment =
      std::sqrt(std::max(0.0, fourth - out.second_moment * out.second_moment) / n);
  out.se_significance =
      std::sqrt(out.significance_fraction * (1.0 - out.significance_fraction) / n);
  for (std::size_t i = 0; i < grid.size(); ++i) {
    out.tail_counts.push_back({grid[i], static_cast<double>(tail[i]) / n});
  }
  return out;
}

OffspringLaw empirical_degree_law(const std::vector<std::int64_t>& degrees) {
  std::vector<std::uint64_t> values;
  std::vector<double> probs;
  std::vector<std::int64_t> sorted = degrees;
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t i = 0; i < sorted.size();) {
    std::size_t j = i;
    while (j < sorted.size() && sorted[j] == sorted[i]) ++j;
    values.push_back(static_cast<std::uint64_t>(sorted[i]));
    probs.push_back(static_cast<double>(j - i));
    i = j;
  }
  return OffspringLaw::table(values, probs);
}

std::variant<GwSampler, IerSampler, PolyaSampler> make_sampler(const ModelConfig& c) {
  validate(c);
  switch (c.model) {
    case Model::kHer:
      return GwSampler(OffspringLaw::poisson(c.lambda), OffspringLaw::poisson(c.lambda));
    case Model::kIer:
      return IerSampler(c.lambda, *c.kernel);
    case Model::kCm: {
      OffspringLaw law =
          c.degree_law ? *c.degree_law : empirical_degree_law(c.explicit_degrees);
      OffspringLaw child = law.size_biased();
      return GwSampler(std::move(law), std::move(child));
    }
    case Model::kPam:
      return PolyaSampler(c.delta);
  }
  throw Error(ErrorCode::kInvalidArgument, "unknown model");
}

std::uint64_t batch_count(std::uint64_t n) { return (n + kBatch - 1) / kBatch; }

}  // namespace

std::vector<double> default_tail_grid() { return {1, 2, 5, 10, 20, 50, 100}; }

LimitModel::LimitModel(const ModelConfig& config) : sampler_(make_sampler(config)) {}

DeltaDraw LimitModel::draw(Rng& rng) const {
  return std::visit([&](const auto& s) { return s.draw(rng); }, sampler_);
}

void LimitModel::sample(Rng& rng, LimitSample& out) const {
  std::visit([&](const auto& s) { s.sample(rng, out); }, sampler_);
}

SummaryStats run_graph_experiment(const ModelConfig& config, std::size_t n,
                                  std::uint64_t replicates, std::uint64_t master_seed,
                                  const ExperimentOptions& options) {
  if (replicates == 0) throw Error(ErrorCode::kInvalidArgument, "replicates must be >= 1");
  validate(config);
  const auto& grid = options.tail_grid;
  std::vector<std::vector<Partial>> per_replicate(replicates);
  parallel_for(replicates, resolve_threads(options.threads), [&](std::size_t r) {
    Rng rng = Rng::stream(master_seed, r);
    const MultiGraph g = generate_graph(config, n, rng);
    const std::size_t nv = g.num_vertices();
    auto& parts = per_replicate[r];
    for (std::size_t start = 0; start < nv; start += kBatch) {
      Partial p(grid.size());
      const std::size_t end = std::min<std::size_t>(nv, start + kBatch);
      for (std::size_t i = start; i < end; ++i) {
        const auto v = static_cast<Vertex>(i);
        const double b = friendship_bias(g, v);
        p.add(b, b >= 0.0, static_cast<std::uint64_t>(g.degree(v)), grid);
      }
      parts.push_back(std::move(p));
    }
  });
  std::vector<Partial> all;
  for (auto& parts : per_replicate) {
    for (auto& p : parts) all.push_back(std::move(p));
  }
  return reduce(all, grid);
}

SummaryStats run_limit_experiment(const ModelConfig& config, std::uint64_t n_samples,
                                  std::uint64_t master_seed,
                                  const ExperimentOptions& options) {
  if (n_samples == 0) throw Error(ErrorCode::kInvalidArgument, "need at least one sample");
  const LimitModel model(config);
  const auto& grid = options.tail_grid;
  const std::uint64_t batches = batch_count(n_samples);
  std::vector<Partial> parts(batches, Partial(grid.size()));
  parallel_for(batches, resolve_threads(options.threads), [&](std::size_t b) {
    Rng rng = Rng::stream(master_seed, b);
    const std::uint64_t count = std::min(kBatch, n_samples - b * kBatch);
    Partial& p = parts[b];
    for (std::uint64_t i = 0; i < count; ++i) {
      const DeltaDraw d = model.draw(rng);
      p.add(d.delta, d.nonneg, d.d_phi, grid);
    }
  });
  return reduce(parts, grid);
}

std::vector<double> graph_bias_values(const ModelConfig& config, std::size_t n, Rng& rng) {
  return bias_vector(generate_graph(config, n, rng));
}

std::vector<double> limit_bias_values(const ModelConfig& config, std::uint64_t n_samples,
                                      std::uint64_t master_seed, unsigned threads) {
  const LimitModel model(config);
  std::vector<double> out(n_samples);
  parallel_for(batch_count(n_samples), resolve_threads(threads), [&](std::size_t b) {
    Rng rng = Rng::stream(master_seed, b);
    const std::uint64_t end = std::min(n_samples, (b + 1) * kBatch);
    for (std::uint64_t i = b * kBatch; i < end; ++i) out[i] = model.draw(rng).delta;
  });
  return out;
}

TailFit tail_exponent_fit(const EmpiricalMeasure& samples, double x_min) {
  if (!(x_min > 0.0)) throw Error(ErrorCode::kInvalidArgument, "x_min must be > 0");
  const auto atoms = samples.atoms();
  if (atoms.empty()) throw Error(ErrorCode::kInsufficientTail, "no samples");
  double w_min = INFINITY;
  for (const Atom& a : atoms) w_min = std::min(w_min, a.weight);
  // Highest x whose tail still holds about 20 of the lightest atoms.
  const double target = 20.0 * w_min;
  double upper = 0.0;
  double x_max = atoms.front().value;
  for (std::size_t i = atoms.size(); i-- > 0;) {
    upper += atoms[i].weight;
    if (upper >= target) {
      x_max = atoms[i].value;
      break;
    }
  }
  if (!(x_max > x_min)) {
    throw Error(ErrorCode::kInsufficientTail, "too few samples above x_min");
  }
  constexpr int kGrid = 20;
  std::vector<double> lx;
  std::vector<double> ly;
  for (int i = 0; i < kGrid; ++i) {
    const double x = x_min * std::pow(x_max / x_min, static_cast<double>(i) / (kGrid - 1));
    const double t = samples.tail(x);
    if (t > 0.0) {
      lx.push_back(std::log(x));
      ly.push_back(std::log(t));
    }
  }
  if (lx.size() < 10) throw Error(ErrorCode::kInsufficientTail, "fewer than 10 tail points");
  const double m = static_cast<double>(lx.size());
  const double mx = std::accumulate(lx.begin(), lx.end(), 0.0) / m;
  const double my = std::accumulate(ly.begin(), ly.end(), 0.0) / m;
  double sxx = 0.0;
  double sxy = 0.0;
  double syy = 0.0;
  for (std::size_t i = 0; i < lx.size(); ++i) {
    sxx += (lx[i] - mx) * (lx[i] - mx);
    sxy += (lx[i] - mx) * (ly[i] - my);
    syy += (ly[i] - my) * (ly[i] - my);
  }
  TailFit fit;
  fit.slope = sxy / sxx;
  fit.intercept = my - fit.slope * mx;
  fit.r2 = syy > 0.0 ? sxy * sxy / (sxx * syy) : 1.0;
  fit.x_max = x_max;
  fit.points = lx.size();
  return fit;
}

std::vector<ConvergenceRow> convergence_study(const ModelConfig& config,
                                              const std::vector<std::uint64_t>& n_grid,
                                              std::uint64_t replicates,
                                              std::uint64_t master_seed,
                                              std::uint64_t tree_samples, unsigned threads) {
  if (replicates == 0) throw Error(ErrorCode::kInvalidArgument, "replicates must be >= 1");
  if (!std::is_sorted(n_grid.begin(), n_grid.end())) {
    throw Error(ErrorCode::kInvalidArgument, "n_grid must be ascending");
  }
  const unsigned workers = resolve_threads(threads);
  const EmpiricalMeasure tree = EmpiricalMeasure::from_samples(
      limit_bias_values(config, tree_samples, ~master_seed, workers));
  std::vector<ConvergenceRow> rows;
  for (std::size_t idx = 0; idx < n_grid.size(); ++idx) {
    std::vector<double> distance(replicates);
    std::vector<double> sums(replicates);
    std::vector<std::uint64_t> nonneg(replicates);
    std::vector<std::uint64_t> counts(replicates);
    parallel_for(replicates, workers, [&](std::size_t r) {
      Rng rng = Rng::stream(master_seed + 1 + idx, r);
      const std::vector<double> bias = graph_bias_values(config, n_grid[idx], rng);
      distance[r] = kolmogorov_distance(EmpiricalMeasure::from_samples(bias), tree);
      sums[r] = pairwise_sum(bias);
      nonneg[r] = static_cast<std::uint64_t>(
          std::count_if(bias.begin(), bias.end(), [](double b) { return b >= 0.0; }));
      counts[r] = bias.size();
    });
    ConvergenceRow row;
    row.n = n_grid[idx];
    const double total = static_cast<double>(
        std::accumulate(counts.begin(), counts.end(), std::uint64_t{0}));
    row.kolmogorov = pairwise_sum(distance) / static_cast<double>(replicates);
    row.mean = pairwise_sum(sums) / total;
    row.significance =
        static_cast<double>(std::accumulate(nonneg.begin(), nonneg.end(), std::uint64_t{0})) /
        total;
    rows.push_back(row);
  }
  return rows;
}

std::string csv_field(const std::string& text) {
  if (text.find_first_of(",\"\r\n") == std::string::npos) return text;
  std::string out = "\"";
  for (char ch : text) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}

void write_experiment_header(std::ostream& out) {
  out << "model,param,n,replicates,mean,m2,significance,se_mean,se_sig\r\n";
}

void write_experiment_row(std::ostream& out, const ModelConfig& config, std::uint64_t n,
                          std::uint64_t replicates, const SummaryStats& s) {
  out << model_name(config.model) << ',' << csv_field(describe_params(config)) << ',' << n
      << ',' << replicates << ',' << format_double(s.mean) << ','
      << format_double(s.second_moment) << ',' << format_double(s.significance_fraction)
      << ',' << format_double(s.se_mean) << ',' << format_double(s.se_significance) << "\r\n";
}

void write_convergence_csv(std::ostream& out, const std::vector<ConvergenceRow>& rows) {
  out << "n,kolmogorov,mean,significance\r\n";
  for (const ConvergenceRow& r : rows) {
    out << r.n << ',' << format_double(r.kolmogorov) << ',' << format_double(r.mean) << ','
        << format_double(r.significance) << "\r\n";
  }
}

}  // namespace fbl
