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

#include "fbl/edge_list_io.h"

#include <charconv>
#include <istream>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "fbl/error.h"

namespace fbl {
namespace {

bool parse_u64(std::string_view text, std::uint64_t& value) {
  const auto* first = text.data();
  const auto* last = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  return ec == std::errc() && ptr == last;
}

std::string_view trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

}  // namespace

void write_edge_list(std::ostream& out, const MultiGraph& g) {
  std::string buffer = "# n=" + std::to_string(g.num_vertices()) + "\n";
  for (const Edge& e : g.edges()) {
    buffer += std::to_string(e.u);
    buffer += ' ';
    buffer += std::to_string(e.v);
    buffer += '\n';
    if (buffer.size() > (1u << 16)) {
      out << buffer;
      buffer.clear();
    }
  }
  out << buffer;
}

MultiGraph read_edge_list(std::istream& in) {
  std::optional<std::uint64_t> n;
  std::vector<Edge> edges;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const std::string_view text = trim(line);
    if (text.empty()) continue;
    if (text.front() == '#') {
      const std::string_view body = trim(text.substr(1));
      if (body.starts_with("n=")) {
        std::uint64_t value = 0;
        if (!parse_u64(trim(body.substr(2)), value)) {
          throw Error(ErrorCode::kParseError,
                      "bad header on line " + std::to_string(line_no));
        }
        n = value;
      }
      continue;
    }
    const auto space = text.find_first_of(" \t");
    std::uint64_t u = 0;
    std::uint64_t v = 0;
    if (space == std::string_view::npos || !parse_u64(text.substr(0, space), u) ||
        !parse_u64(trim(text.substr(space)), v)) {
      throw Error(ErrorCode::kParseError,
                  "expected \"u v\" on line " + std::to_string(line_no));
    }
    if (!n) {
      throw Error(ErrorCode::kParseError, "missing \"# n=<n>\" header before edges");
    }
    if (u >= *n || v >= *n) {
      throw Error(ErrorCode::kParseError,
                  "vertex out of range on line " + std::to_string(line_no));
    }
    edges.push_back(Edge{static_cast<Vertex>(u), static_cast<Vertex>(v)});
  }
  if (!n) throw Error(ErrorCode::kParseError, "missing \"# n=<n>\" header");
  return MultiGraph::from_edges(*n, edges);
}

}  // namespace fbl
