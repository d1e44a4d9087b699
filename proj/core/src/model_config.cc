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

#include "fbl/model_config.h"

#include <cmath>

#include "json.hpp"

#include "fbl/error.h"
#include "fbl/format.h"
#include "fbl/generators.h"

namespace fbl {

namespace {

using nlohmann::json;

KernelFunction kernel_from_json(const json& j) {
  const std::string type = j.at("type").get<std::string>();
  if (type == "constant") return KernelFunction::constant(j.at("value").get<double>());
  if (type == "piecewise_constant") {
    return KernelFunction::piecewise_constant(j.at("breakpoints").get<std::vector<double>>(),
                                              j.at("values").get<std::vector<double>>());
  }
  if (type == "polynomial") {
    return KernelFunction::polynomial(j.at("coefficients").get<std::vector<double>>());
  }
  if (type == "tabulated") {
    return KernelFunction::tabulated(j.at("x").get<std::vector<double>>(),
                                     j.at("y").get<std::vector<double>>());
  }
  throw Error(ErrorCode::kParseError, "unknown kernel type '" + type + "'");
}

template <typename Fn>
auto with_json_errors(Fn&& fn) {
  try {
    return fn();
  } catch (const json::exception& e) {
    throw Error(ErrorCode::kParseError, e.what());
  }
}

}  // namespace

std::string model_name(Model m) {
  switch (m) {
    case Model::kHer:
      return "her";
    case Model::kIer:
      return "ier";
    case Model::kCm:
      return "cm";
    case Model::kPam:
      return "pam";
  }
  return {};
}

Model parse_model_name(const std::string& name) {
  if (name == "her") return Model::kHer;
  if (name == "ier") return Model::kIer;
  if (name == "cm") return Model::kCm;
  if (name == "pam") return Model::kPam;
  throw Error(ErrorCode::kParseError, "unknown model '" + name + "'");
}

KernelFunction parse_kernel_json(const std::string& json_text) {
  return with_json_errors([&] { return kernel_from_json(json::parse(json_text)); });
}

ModelConfig parse_model_config(const std::string& json_text) {
  ModelConfig config = with_json_errors([&] {
    const json j = json::parse(json_text);
    if (!j.is_object()) throw Error(ErrorCode::kParseError, "config must be an object");
    ModelConfig c;
    c.model = parse_model_name(j.at("model").get<std::string>());
    if (j.contains("lambda")) c.lambda = j.at("lambda").get<double>();
    if (j.contains("delta")) c.delta = j.at("delta").get<double>();
    if (j.contains("n")) c.n = j.at("n").get<std::uint64_t>();
    if (j.contains("seed")) c.seed = j.at("seed").get<std::uint64_t>();
    if (j.contains("kernel")) c.kernel = kernel_from_json(j.at("kernel"));
    if (j.contains("degrees")) {
      const json& d = j.at("degrees");
      if (d.contains("law")) {
        c.degree_law = parse_law(d.at("law").get<std::string>());
      } else if (d.contains("explicit")) {
        c.explicit_degrees = d.at("explicit").get<std::vector<std::int64_t>>();
      } else {
        throw Error(ErrorCode::kParseError, "degrees needs 'law' or 'explicit'");
      }
    }
    return c;
  });
  validate(config);
  return config;
}

void validate(const ModelConfig& c) {
  if (c.n == 0) throw Error(ErrorCode::kInvalidArgument, "n must be >= 1");
  switch (c.model) {
    case Model::kHer:
      if (!(c.lambda > 0.0)) throw Error(ErrorCode::kInvalidArgument, "lambda must be > 0");
      break;
    case Model::kIer:
      if (!(c.lambda > 0.0)) throw Error(ErrorCode::kInvalidArgument, "lambda must be > 0");
      if (!c.kernel) throw Error(ErrorCode::kKernelInvalid, "ier needs a kernel");
      break;
    case Model::kCm: {
      if (!c.degree_law && c.explicit_degrees.empty()) {
        throw Error(ErrorCode::kInvalidArgument, "cm needs a degree law or sequence");
      }
      if (c.degree_law && c.degree_law->has_mass_at_zero()) {
        throw Error(ErrorCode::kLawSupportsZero, "cm degree law has mass at 0");
      }
      std::int64_t total = 0;
      for (std::int64_t d : c.explicit_degrees) {
        if (d < 0) throw Error(ErrorCode::kInvalidArgument, "negative degree");
        total += d;
      }
      if (total % 2 != 0) throw Error(ErrorCode::kOddDegreeSum, "degree sum is odd");
      break;
    }
    case Model::kPam:
      if (!(c.delta >= -1.0)) throw Error(ErrorCode::kDeltaOutOfRange, "delta must be >= -1");
      break;
  }
}

std::string describe_params(const ModelConfig& c) {
  switch (c.model) {
    case Model::kHer:
      return "lambda=" + format_double(c.lambda);
    case Model::kIer:
      return "lambda=" + format_double(c.lambda) + ";kernel=" + c.kernel->describe();
    case Model::kCm:
      if (c.degree_law) return "law=" + c.degree_law->describe();
      return "explicit=" + std::to_string(c.explicit_degrees.size());
    case Model::kPam:
      return "delta=" + format_double(c.delta);
  }
  return {};
}

MultiGraph generate_graph(const ModelConfig& c, std::size_t n, Rng& rng) {
  switch (c.model) {
    case Model::kHer:
      return gen_her(n, c.lambda, rng);
    case Model::kIer:
      return gen_ier(n, c.lambda, *c.kernel, rng);
    case Model::kCm:
      if (!c.explicit_degrees.empty()) {
        return gen_cm(DegreeSequence{c.explicit_degrees, false}, rng);
      }
      return gen_cm(sample_degree_sequence(*c.degree_law, n, rng), rng);
    case Model::kPam:
      return gen_pam(n, c.delta, rng);
  }
  throw Error(ErrorCode::kInvalidArgument, "unknown model");
}

}  // namespace fbl
