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


#include "cli.h"

#include <unistd.h>

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "fbl/analytics.h"
#include "fbl/edge_list_io.h"
#include "fbl/error.h"
#include "fbl/estimation.h"
#include "fbl/format.h"
#include "fbl/friendship_bias.h"
#include "fbl/limit_trees.h"
#include "fbl/model_config.h"
#include "fbl/offspring_law.h"
#include "fbl/parallel.h"
#include "grid.h"
#include "json.hpp"

namespace fbl::cli {
namespace {

using nlohmann::json;
constexpr const char* kEol = "\r\n";

struct Common {
  std::uint64_t seed = 1;
  unsigned threads = 0;
  std::string output = "-";
  std::string format = "csv";
  bool seed_given = false;
};

// Flags describing a model, either through --config or inline.
struct ModelFlags {
  std::string config_path;
  std::string model;
  double lambda = 1.0;
  double delta = 0.0;
  std::string law;
  std::string kernel;
  std::string degrees;
  std::uint64_t n = 0;
  CLI::Option* lambda_opt = nullptr;
  CLI::Option* delta_opt = nullptr;
  CLI::Option* n_opt = nullptr;
};

void add_model_flags(CLI::App* cmd, ModelFlags& f) {
  cmd->add_option("--config", f.config_path, "model configuration (JSON file)");
  cmd->add_option("--model", f.model, "her, ier, cm or pam");
  f.lambda_opt = cmd->add_option("--lambda", f.lambda, "edge intensity (her, ier)");
  f.delta_opt = cmd->add_option("--delta", f.delta, "attachment shift (pam)");
  cmd->add_option("--law", f.law, "degree law for cm, e.g. zeta:3.5");
  cmd->add_option("--kernel", f.kernel, "kernel JSON, or @file");
  cmd->add_option("--degrees", f.degrees, "explicit cm degree sequence, comma separated");
  f.n_opt = cmd->add_option("--n", f.n, "number of vertices");
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kInvalidArgument, "cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::string json_argument(const std::string& text) {
  return !text.empty() && text.front() == '@' ? read_file(text.substr(1)) : text;
}

ModelConfig build_config(const ModelFlags& f, const Common& common) {
  ModelConfig config;
  if (!f.config_path.empty()) {
    config = parse_model_config(read_file(f.config_path));
  } else if (f.model.empty()) {
    throw Error(ErrorCode::kInvalidArgument, "either --config or --model is required");
  }
  if (!f.model.empty()) config.model = parse_model_name(f.model);
  if (f.lambda_opt->count() > 0) config.lambda = f.lambda;
  if (f.delta_opt->count() > 0) config.delta = f.delta;
  if (!f.law.empty()) config.degree_law = parse_law(f.law);
  if (!f.kernel.empty()) config.kernel = parse_kernel_json(json_argument(f.kernel));
  if (!f.degrees.empty()) {
    config.explicit_degrees.clear();
    for (double d : parse_list(f.degrees)) {
      if (d < 0 || d != std::floor(d)) {
        throw Error(ErrorCode::kParseError, "degrees must be nonnegative integers");
      }
      config.explicit_degrees.push_back(static_cast<std::int64_t>(d));
    }
    config.degree_law.reset();
  }
  if (f.n_opt->count() > 0) config.n = f.n;
  if (common.seed_given || f.config_path.empty()) config.seed = common.seed;
  validate(config);
  return config;
}

KernelFunction required_kernel(const std::string& text) {
  if (text.empty()) throw Error(ErrorCode::kInvalidArgument, "--kernel is required");
  return parse_kernel_json(json_argument(text));
}

json stats_json(const std::string& source, const ModelConfig& config, std::uint64_t n,
                std::uint64_t replicates, const SummaryStats& s) {
  return json{{"source", source},
              {"model", model_name(config.model)},
              {"param", describe_params(config)},
              {"n", n},
              {"replicates", replicates},
              {"mean", s.mean},
              {"m2", s.second_moment},
              {"significance", s.significance_fraction},
              {"se_mean", s.se_mean},
              {"se_sig", s.se_significance}};
}

// ---- subcommands -----------------------------------------------------------

void cmd_generate(const ModelFlags& f, const Common& c, std::ostream& out) {
  ModelConfig config = build_config(f, c);
  Rng rng(config.seed);
  MultiGraph g = generate_graph(config, config.n, rng);
  if (c.format == "json") {
    json edges = json::array();
    for (const Edge& e : g.edges()) edges.push_back({e.u, e.v});
    out << json{{"n", g.num_vertices()}, {"edges", edges}}.dump() << "\n";
  } else {
    write_edge_list(out, g);
  }
}

void cmd_bias(const ModelFlags& f, const std::string& input, const Common& c,
              std::ostream& out) {
  MultiGraph g;
  if (!input.empty()) {
    std::ifstream in(input);
    if (!in) throw Error(ErrorCode::kInvalidArgument, "cannot open " + input);
    g = read_edge_list(in);
  } else {
    ModelConfig config = build_config(f, c);
    Rng rng(config.seed);
    g = generate_graph(config, config.n, rng);
  }
  std::vector<double> bias = bias_vector(g);
  if (c.format == "json") {
    json doc{{"n", g.num_vertices()}, {"average_bias", average_bias(g)}};
    std::size_t nonneg = std::count_if(bias.begin(), bias.end(), [](double x) { return x >= 0; });
    doc["significance"] =
        g.num_vertices() == 0 ? 0.0 : static_cast<double>(nonneg) / g.num_vertices();
    if (g.has_loops()) {
      doc["certificate"] = nullptr;
    } else {
      ParadoxCertificate cert = paradox_certificate(g);
      doc["certificate"] = {{"avg", cert.avg},
                            {"nonneg", cert.nonneg},
                            {"rewrite_avg", cert.rewrite_avg},
                            {"all_components_regular", cert.all_components_regular}};
    }
    out << doc.dump() << "\n";
    return;
  }
  out << "vertex,degree,bias" << kEol;
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    out << v << ',' << g.degree(v) << ',' << format_double(bias[v]) << kEol;
  }
}

void cmd_limit_sample(const ModelFlags& f, std::uint64_t samples, const Common& c,
                      std::ostream& out) {
  ModelConfig config = build_config(f, c);
  LimitModel model(config);
  constexpr std::uint64_t kBatch = 4096;
  const std::uint64_t batches = (samples + kBatch - 1) / kBatch;
  std::vector<DeltaDraw> draws(samples);
  parallel_for(batches, resolve_threads(c.threads), [&](std::size_t b) {
    Rng rng = Rng::stream(config.seed, b);
    std::uint64_t end = std::min(samples, (b + 1) * kBatch);
    for (std::uint64_t i = b * kBatch; i < end; ++i) draws[i] = model.draw(rng);
  });
  if (c.format == "json") {
    json d_phi = json::array();
    json delta = json::array();
    for (const DeltaDraw& d : draws) {
      d_phi.push_back(d.d_phi);
      delta.push_back(d.delta);
    }
    out << json{{"d_phi", d_phi}, {"delta", delta}}.dump() << "\n";
    return;
  }
  out << "d_phi,delta" << kEol;
  for (const DeltaDraw& d : draws) out << d.d_phi << ',' << format_double(d.delta) << kEol;
}

struct CompareFlags {
  std::uint64_t replicates = 5;
  std::uint64_t samples = 1000000;
  std::string n_grid;
};

void cmd_compare(const ModelFlags& f, const CompareFlags& cf, const Common& c,
                 std::ostream& out) {
  ModelConfig config = build_config(f, c);
  ExperimentOptions opts;
  opts.threads = c.threads;
  if (!cf.n_grid.empty()) {
    std::vector<std::uint64_t> grid;
    for (double v : parse_list(cf.n_grid)) {
      if (v < 1 || v != std::floor(v)) throw Error(ErrorCode::kParseError, "bad --n-grid");
      grid.push_back(static_cast<std::uint64_t>(v));
    }
    auto rows = convergence_study(config, grid, cf.replicates, config.seed, cf.samples, c.threads);
    if (c.format == "json") {
      json doc = json::array();
      for (const auto& r : rows) {
        doc.push_back({{"n", r.n},
                       {"kolmogorov", r.kolmogorov},
                       {"mean", r.mean},
                       {"significance", r.significance}});
      }
      out << doc.dump() << "\n";
    } else {
      write_convergence_csv(out, rows);
    }
    return;
  }
  SummaryStats graph = run_graph_experiment(config, config.n, cf.replicates, config.seed, opts);
  // The tree draws use a different master seed than the graph replicates.
  SummaryStats tree = run_limit_experiment(config, cf.samples, ~config.seed, opts);
  if (c.format == "json") {
    json doc = json::array();
    doc.push_back(stats_json("graph", config, config.n, cf.replicates, graph));
    doc.push_back(stats_json("tree", config, cf.samples, 0, tree));
    out << doc.dump() << "\n";
    return;
  }
  write_experiment_header(out);
  write_experiment_row(out, config, config.n, cf.replicates, graph);
  write_experiment_row(out, config, cf.samples, 0, tree);
}

struct AnalyticFlags {
  std::string op;
  double lambda = 1.0;
  double delta = 0.0;
  double tau = 3.0;
  double x = 10.0;
  double p = 0.1;
  std::uint64_t m1 = 9;
  std::uint64_t m2 = 10;
  std::uint64_t k = 1;
  std::optional<std::uint64_t> kmax;
  std::uint64_t samples = 20000;
  double tol = 1e-12;
  std::string law;
  std::string root;
  std::string child;
  std::string kernel;
};

struct AnalyticResult {
  double value = 0.0;
  double truncation_bound = 0.0;
  json params = json::object();
  json extra = json::object();
};

OffspringLaw required_law(const std::string& text, const char* flag) {
  if (text.empty()) throw Error(ErrorCode::kInvalidArgument, std::string(flag) + " is required");
  return parse_law(text);
}

AnalyticResult run_analytic(const AnalyticFlags& a, const Common& c) {
  AnalyticResult r;
  const std::string& op = a.op;
  if (op == "her-significance") {
    SeriesResult s = her_significance(a.lambda, a.tol);
    r = {s.value, s.truncation_bound, {{"lambda", a.lambda}}};
  } else if (op == "her-moments") {
    Moments m = her_moments(a.lambda);
    r = {m.m1, 0.0, {{"lambda", a.lambda}}, {{"m2", m.m2}}};
  } else if (op == "her-tail") {
    r = {her_tail_asymptote(a.lambda, a.x), 0.0, {{"lambda", a.lambda}, {"x", a.x}}};
  } else if (op == "gw-significance") {
    OffspringLaw root = required_law(a.root, "--root");
    OffspringLaw child = a.child.empty() ? root : parse_law(a.child);
    SeriesResult s = gw_significance_exact(root, child, a.tol);
    r = {s.value, s.truncation_bound, {{"root", root.describe()}, {"child", child.describe()}}};
  } else if (op == "cm-moments") {
    OffspringLaw law = required_law(a.law, "--law");
    Moments m = cm_moments(law);
    r = {m.m1, 0.0, {{"law", law.describe()}}, {{"m2", m.m2}}};
  } else if (op == "cm-bounds") {
    std::uint64_t kmax = a.kmax.value_or(200);
    Interval b = zeta_cm_significance_bounds(a.tau, kmax);
    r = {b.lo, b.hi - b.lo, {{"tau", a.tau}, {"kmax", kmax}}, {{"lower", b.lo}, {"upper", b.hi}}};
  } else if (op == "cm-tail-exponent") {
    r = {cm_tail_exponent(a.tau), 0.0, {{"tau", a.tau}}};
  } else if (op == "bimodal") {
    r = {bimodal_significance(a.p, a.m1, a.m2), 0.0, {{"p", a.p}, {"m1", a.m1}, {"m2", a.m2}}};
  } else if (op == "ier-limit") {
    KernelFunction k = required_kernel(a.kernel);
    r = {ier_limit_significance(k), 0.0, {{"kernel", k.describe()}}};
  } else if (op == "ier-limit-lln") {
    KernelFunction k = required_kernel(a.kernel);
    r = {ier_limit_significance_lln(k), 0.0, {{"kernel", k.describe()}}};
  } else if (op == "ier-moments") {
    KernelFunction k = required_kernel(a.kernel);
    Moments m = ier_moments(a.lambda, k);
    r = {m.m1, 0.0, {{"lambda", a.lambda}, {"kernel", k.describe()}}, {{"m2", m.m2}}};
  } else if (op == "ier-significance") {
    KernelFunction k = required_kernel(a.kernel);
    McEstimate e = ier_significance_mc(a.lambda, k, a.samples, c.seed, c.threads);
    r = {e.estimate, 0.0, {{"lambda", a.lambda}, {"kernel", k.describe()}, {"samples", a.samples}},
         {{"std_err", e.std_err}}};
  } else if (op == "pam-pmf") {
    r = {pam_root_pmf(a.delta, a.k), 0.0, {{"delta", a.delta}, {"k", a.k}},
         {{"tail", pam_root_tail(a.delta, a.k)}}};
  } else if (op == "pam-mean") {
    PamMean m = pam_mean_interval(a.delta, a.tol);
    double mid = m.infinite ? INFINITY : 0.5 * (m.interval.lo + m.interval.hi);
    r = {mid, m.infinite ? 0.0 : 0.5 * (m.interval.hi - m.interval.lo), {{"delta", a.delta}},
         {{"infinite", m.infinite},
          {"lower", m.interval.lo},
          {"upper", m.interval.hi},
          {"p_delta", m.p_delta},
          {"second_moment_finite", pam_second_moment_finite(a.delta)}}};
  } else if (op == "pam-tail-exponents") {
    TailExponents t = pam_tail_exponents(a.delta);
    r = {t.lower_exp, 0.0, {{"delta", a.delta}},
         {{"upper_exponent", t.upper_exp ? json(*t.upper_exp) : json(nullptr)}}};
  } else if (op == "pam-lower-bound") {
    std::uint64_t kmax = a.kmax.value_or(50);
    McEstimate e = pam_significance_lower_bound(a.delta, kmax, a.samples, c.seed, c.threads);
    r = {e.estimate, 0.0, {{"delta", a.delta}, {"kmax", kmax}, {"samples", a.samples}},
         {{"std_err", e.std_err}}};
  } else {
    throw Error(ErrorCode::kInvalidArgument, "unknown --op '" + op + "'");
  }
  return r;
}

void cmd_analytic(const AnalyticFlags& a, const Common& c, std::ostream& out) {
  AnalyticResult r = run_analytic(a, c);
  if (c.format == "json") {
    json doc{{"op", a.op},
             {"value", r.value},
             {"truncation_bound", r.truncation_bound},
             {"params", r.params}};
    for (auto& [key, value] : r.extra.items()) doc[key] = value;
    out << doc.dump() << "\n";
    return;
  }
  out << "op,value,truncation_bound" << kEol;
  out << csv_field(a.op) << ',' << format_double(r.value) << ','
      << format_double(r.truncation_bound) << kEol;
}

struct SweepFlags {
  std::string model;
  std::string param;
  std::string grid;
  std::string op = "significance";
  std::string kernel;
  std::optional<std::uint64_t> kmax;
  std::uint64_t samples = 0;
  double tol = 1e-12;
};

struct SweepRow {
  double param, value, lo, hi;
};

std::vector<SweepRow> run_sweep(const SweepFlags& s, const Common& c) {
  std::vector<double> grid = parse_grid(s.grid);
  auto expect = [&](const char* model, const char* param) {
    return s.model == model && s.param == param;
  };
  std::vector<SweepRow> rows;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const double x = grid[i];
    const std::uint64_t seed = c.seed + i;
    if (expect("her", "lambda") && s.op == "significance") {
      SeriesResult r = her_significance(x, s.tol);
      rows.push_back({x, r.value, r.value - r.truncation_bound, r.value});
    } else if (expect("her", "lambda") && s.op == "mean") {
      double m = her_moments(x).m1;
      rows.push_back({x, m, m, m});
    } else if (expect("cm", "tau") && (s.op == "bounds" || s.op == "significance")) {
      Interval b = zeta_cm_significance_bounds(x, s.kmax.value_or(200));
      rows.push_back({x, b.lo, b.lo, b.hi});
    } else if (expect("cm", "tau") && s.op == "mean") {
      double m = cm_moments(OffspringLaw::zeta(x)).m1;
      rows.push_back({x, m, m, m});
    } else if (expect("ier", "lambda") && s.op == "significance") {
      KernelFunction k = required_kernel(s.kernel);
      McEstimate e = ier_significance_mc(x, k, s.samples ? s.samples : 1000000, seed, c.threads);
      rows.push_back({x, e.estimate, e.estimate - 3 * e.std_err, e.estimate + 3 * e.std_err});
    } else if (expect("ier", "lambda") && s.op == "mean") {
      double m = ier_moments(x, required_kernel(s.kernel)).m1;
      rows.push_back({x, m, m, m});
    } else if (expect("pam", "delta") && s.op == "significance-lower-bound") {
      McEstimate e = pam_significance_lower_bound(x, s.kmax.value_or(50),
                                                  s.samples ? s.samples : 20000, seed, c.threads);
      rows.push_back({x, e.estimate, e.estimate - 3 * e.std_err, e.estimate + 3 * e.std_err});
    } else if (expect("pam", "delta") && s.op == "mean") {
      PamMean m = pam_mean_interval(x, s.tol);
      if (m.infinite) {
        rows.push_back({x, INFINITY, INFINITY, INFINITY});
      } else {
        rows.push_back({x, 0.5 * (m.interval.lo + m.interval.hi), m.interval.lo, m.interval.hi});
      }
    } else {
      throw Error(ErrorCode::kInvalidArgument, "unsupported sweep: --model " + s.model +
                                                   " --param " + s.param + " --op " + s.op);
    }
  }
  return rows;
}

void cmd_sweep(const SweepFlags& s, const Common& c, std::ostream& out) {
  std::vector<SweepRow> rows = run_sweep(s, c);
  if (c.format == "json") {
    json doc = json::array();
    for (const auto& r : rows) {
      doc.push_back({{"param", r.param}, {"value", r.value}, {"bound_lo", r.lo}, {"bound_hi", r.hi}});
    }
    out << doc.dump() << "\n";
    return;
  }
  out << "param,value,bound_lo,bound_hi" << kEol;
  for (const auto& r : rows) {
    out << format_double(r.param) << ',' << format_double(r.value) << ',' << format_double(r.lo)
        << ',' << format_double(r.hi) << kEol;
  }
}

void cmd_conjecture(const std::string& dist, double tol, const Common& c, std::ostream& out) {
  OffspringLaw law = required_law(dist, "--dist");
  SeriesResult r = conjecture_probability(law, tol);
  const bool below = r.value + r.truncation_bound < 0.5;
  if (c.format == "json") {
    out << json{{"dist", dist},
                {"value", r.value},
                {"truncation_bound", r.truncation_bound},
                {"below_half", below}}
               .dump()
        << "\n";
    return;
  }
  out << "dist,value,truncation_bound,below_half" << kEol;
  out << csv_field(dist) << ',' << format_double(r.value) << ','
      << format_double(r.truncation_bound) << ',' << (below ? "true" : "false") << kEol;
}

// Writes next to the target and renames, so readers never see partial files.
void write_atomically(const std::string& path, const std::string& content) {
  namespace fs = std::filesystem;
  fs::path target(path);
  fs::path tmp = target;
  tmp += ".tmp." + std::to_string(::getpid());
  {
    std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
    if (!f) throw std::runtime_error("cannot write " + tmp.string());
    f << content;
    f.flush();
    if (!f) throw std::runtime_error("write failed for " + tmp.string());
  }
  std::error_code ec;
  fs::rename(tmp, target, ec);
  if (ec) {
    fs::remove(tmp);
    throw std::runtime_error("cannot rename to " + path + ": " + ec.message());
  }
}

bool is_config_error(ErrorCode code) {
  return code != ErrorCode::kTruncationFailure && code != ErrorCode::kInsufficientTail;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Friendship-bias simulation and analysis"};
  app.name("fbl");
  app.require_subcommand(1, 1);
  app.fallthrough();

  Common common;
  auto* seed_opt = app.add_option("--seed", common.seed, "master seed");
  app.add_option("--threads", common.threads, "worker threads (0: $FBL_THREADS or all cores)");
  app.add_option("--output,-o", common.output, "output path, '-' for stdout");
  app.add_option("--format", common.format, "csv or json")
      ->check(CLI::IsMember({"csv", "json"}));

  ModelFlags generate_model, bias_model, limit_model, compare_model;
  std::string bias_input;
  std::uint64_t limit_samples = 10000;
  CompareFlags compare;
  AnalyticFlags analytic;
  SweepFlags sweep;
  std::string dist;
  double conj_tol = 1e-12;

  auto* generate = app.add_subcommand("generate", "sample one graph and print its edge list");
  add_model_flags(generate, generate_model);

  auto* bias = app.add_subcommand("bias", "per-vertex friendship bias of a graph");
  add_model_flags(bias, bias_model);
  bias->add_option("--input", bias_input, "edge list file instead of a generated graph");

  auto* limit = app.add_subcommand("limit-sample", "draw (d_phi, delta) from the limit tree");
  add_model_flags(limit, limit_model);
  limit->add_option("--samples", limit_samples, "number of draws");

  auto* cmp = app.add_subcommand("compare", "graph replicates against limit-tree draws");
  add_model_flags(cmp, compare_model);
  cmp->add_option("--replicates", compare.replicates, "graph replicates");
  cmp->add_option("--samples", compare.samples, "limit-tree draws");
  cmp->add_option("--n-grid", compare.n_grid, "comma separated sizes: convergence table");

  auto* an = app.add_subcommand("analytic", "closed forms, series and bounds");
  an->add_option("--op", analytic.op, "quantity to evaluate")->required();
  an->add_option("--lambda", analytic.lambda);
  an->add_option("--delta", analytic.delta);
  an->add_option("--tau", analytic.tau);
  an->add_option("--x", analytic.x);
  an->add_option("--p", analytic.p);
  an->add_option("--m1", analytic.m1);
  an->add_option("--m2", analytic.m2);
  an->add_option("--k", analytic.k);
  an->add_option("--kmax", analytic.kmax);
  an->add_option("--samples", analytic.samples);
  an->add_option("--tol", analytic.tol);
  an->add_option("--law", analytic.law);
  an->add_option("--root", analytic.root);
  an->add_option("--child", analytic.child);
  an->add_option("--kernel", analytic.kernel, "kernel JSON, or @file");

  auto* sw = app.add_subcommand("sweep", "evaluate one quantity over a parameter grid");
  sw->add_option("--model", sweep.model)->required();
  sw->add_option("--param", sweep.param)->required();
  sw->add_option("--grid", sweep.grid, "a:b[:log|lin[:points]]")->required();
  sw->add_option("--op", sweep.op);
  sw->add_option("--kernel", sweep.kernel, "kernel JSON, or @file");
  sw->add_option("--kmax", sweep.kmax);
  sw->add_option("--samples", sweep.samples);
  sw->add_option("--tol", sweep.tol);

  auto* conj = app.add_subcommand("conjecture", "P{X_1 + ... + X_{X_0} >= X_0 (X_0 - 1)}");
  conj->add_option("--dist", dist, "offspring law, e.g. poisson:2")->required();
  conj->add_option("--tol", conj_tol);

  std::vector<std::string> args;
  for (int i = argc - 1; i > 0; --i) args.emplace_back(argv[i]);
  try {
    app.parse(std::move(args));
  } catch (const CLI::ParseError& e) {
    std::ostringstream o;
    std::ostringstream e_out;
    int code = app.exit(e, o, e_out);
    out << o.str();
    err << e_out.str();
    return code == 0 ? kExitOk : kExitConfig;
  }
  common.seed_given = seed_opt->count() > 0;

  std::ostringstream buffer;
  try {
    if (*generate) {
      cmd_generate(generate_model, common, buffer);
    } else if (*bias) {
      cmd_bias(bias_model, bias_input, common, buffer);
    } else if (*limit) {
      cmd_limit_sample(limit_model, limit_samples, common, buffer);
    } else if (*cmp) {
      cmd_compare(compare_model, compare, common, buffer);
    } else if (*an) {
      cmd_analytic(analytic, common, buffer);
    } else if (*sw) {
      cmd_sweep(sweep, common, buffer);
    } else if (*conj) {
      cmd_conjecture(dist, conj_tol, common, buffer);
    }
  } catch (const Error& e) {
    err << "fbl: " << e.what() << "\n";
    return is_config_error(e.code()) ? kExitConfig : kExitRuntime;
  } catch (const std::exception& e) {
    err << "fbl: " << e.what() << "\n";
    return kExitRuntime;
  }

  try {
    if (common.output.empty() || common.output == "-") {
      out << buffer.str();
      out.flush();
    } else {
      write_atomically(common.output, buffer.str());
    }
  } catch (const std::exception& e) {
    err << "fbl: " << e.what() << "\n";
    return kExitRuntime;
  }
  return kExitOk;
}

}  // namespace fbl::cli
