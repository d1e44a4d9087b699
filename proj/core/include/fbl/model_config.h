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

#ifndef FBL_MODEL_CONFIG_H_
#define FBL_MODEL_CONFIG_H_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "fbl/kernel.h"
#include "fbl/multigraph.h"
#include "fbl/offspring_law.h"
#include "fbl/rng.h"

namespace fbl {

enum class Model { kHer, kIer, kCm, kPam };

struct ModelConfig {
  Model model = Model::kHer;
  double lambda = 1.0;
  double delta = 0.0;
  std::optional<KernelFunction> kernel;
  // CM degrees: either i.i.d. from a law or an explicit sequence.
  std::optional<OffspringLaw> degree_law;
  std::vector<std::int64_t> explicit_degrees;
  std::uint64_t n = 1000;
  std::uint64_t seed = 0;
};

std::string model_name(Model m);
Model parse_model_name(const std::string& name);

// JSON document:
//   {"model": "her"|"ier"|"cm"|"pam", "lambda": .., "delta": ..,
//    "kernel": {"type": "constant", "value": c}
//            | {"type": "piecewise_constant", "breakpoints": [..], "values": [..]}
//            | {"type": "polynomial", "coefficients": [..]}
//            | {"type": "tabulated", "x": [..], "y": [..]},
//    "degrees": {"law": "zeta:3.5"} | {"explicit": [..]},
//    "n": .., "seed": ..}
// Throws kParseError for malformed input and the model-specific codes for
// invalid parameters.
ModelConfig parse_model_config(const std::string& json_text);
KernelFunction parse_kernel_json(const std::string& json_text);
// Checks the parameter invariants of the chosen model.
void validate(const ModelConfig& config);

// Compact parameter summary without commas, e.g. "lambda=2".
std::string describe_params(const ModelConfig& config);

// One graph of the configured model with n vertices (explicit CM sequences
// fix n themselves).
MultiGraph generate_graph(const ModelConfig& config, std::size_t n, Rng& rng);

}  // namespace fbl

#endif  // FBL_MODEL_CONFIG_H_
