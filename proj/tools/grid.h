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


#ifndef FBL_TOOLS_GRID_H_
#define FBL_TOOLS_GRID_H_

#include <cstddef>
#include <string>
#include <vector>

namespace fbl::cli {

inline constexpr std::size_t kDefaultGridPoints = 100;

// "a:b" (linear), "a:b:log" or "a:b:log:points" / "a:b:lin:points".
// Endpoints are included; a single point requires a == b.
std::vector<double> parse_grid(const std::string& text);

// Comma separated list of numbers, e.g. "1000,10000".
std::vector<double> parse_list(const std::string& text);

}  // namespace fbl::cli

#endif  // FBL_TOOLS_GRID_H_
