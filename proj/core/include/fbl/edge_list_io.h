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

#ifndef FBL_EDGE_LIST_IO_H_
#define FBL_EDGE_LIST_IO_H_

#include <iosfwd>

#include "fbl/multigraph.h"

namespace fbl {

// Text edge-list format:
//   # n=<n>
//   u v        (0-indexed, one edge per line, "u u" for a self-loop)
// Lines starting with '#' other than the header are comments.
void write_edge_list(std::ostream& out, const MultiGraph& g);
MultiGraph read_edge_list(std::istream& in);

}  // namespace fbl

#endif  // FBL_EDGE_LIST_IO_H_
