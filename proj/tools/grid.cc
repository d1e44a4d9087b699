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


#include "grid.h"

#include <cmath>
#include <sstream>

#include "fbl/error.h"
#include "fbl/format.h"

namespace fbl::cli {
namespace {

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, sep)) parts.push_back(item);
  if (!text.empty() && text.back() == sep) parts.emplace_back();
  return parts;
}

double number(const std::string& text, const std::string& context) {
  auto v = parse_double(text);
  if (!v || !std::isfinite(*v)) {
    throw Error(ErrorCode::kParseError, "bad number '" + text + "' in '" + context + "'");
  }
  return *v;
}

}  // namespace

std::vector<double> parse_grid(const std::string& text) {
  auto parts = split(text, ':');
  if (parts.size() < 2 || parts.size() > 4) {
    throw Error(ErrorCode::kParseError, "grid must look like a:b[:log|lin[:points]]: " + text);
  }
  double a = number(parts[0], text);
  double b = number(parts[1], text);
  bool log_scale = false;
  if (parts.size() >= 3) {
    if (parts[2] == "log") {
      log_scale = true;
    } else if (parts[2] != "lin") {
      throw Error(ErrorCode::kParseError, "grid scale must be log or lin: " + text);
    }
  }
  std::size_t points = kDefaultGridPoints;
  if (parts.size() == 4) {
    auto p = parse_count(parts[3]);
    if (!p || *p == 0) throw Error(ErrorCode::kParseError, "bad point count: " + text);
    points = *p;
  }
  if (a > b) throw Error(ErrorCode::kParseError, "grid start exceeds end: " + text);
  if (log_scale && a <= 0.0) {
    throw Error(ErrorCode::kParseError, "log grid needs positive endpoints: " + text);
  }
  if (points == 1) {
    if (a != b) throw Error(ErrorCode::kParseError, "one-point grid needs a == b: " + text);
    return {a};
  }
  std::vector<double> grid(points);
  for (std::size_t i = 0; i < points; ++i) {
    double t = static_cast<double>(i) / static_cast<double>(points - 1);
    grid[i] = log_scale ? std::exp(std::log(a) + t * (std::log(b) - std::log(a)))
                        : a + t * (b - a);
  }
  // Pin the endpoints exactly.
  grid.front() = a;
  grid.back() = b;
  return grid;
}

std::vector<double> parse_list(const std::string& text) {
  std::vector<double> values;
  for (const auto& item : split(text, ',')) values.push_back(number(item, text));
  if (values.empty()) throw Error(ErrorCode::kParseError, "empty list");
  return values;
}

}  // namespace fbl::cli
