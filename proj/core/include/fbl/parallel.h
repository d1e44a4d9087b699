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

#ifndef FBL_PARALLEL_H_
#define FBL_PARALLEL_H_

#include <cstddef>
#include <functional>
#include <span>

namespace fbl {

// Worker count: `requested` when non-zero, else $FBL_THREADS, else the
// hardware concurrency (at least 1).
unsigned resolve_threads(unsigned requested);

// Runs body(i) for i in [0, count) on up to `threads` workers. Work items are
// claimed dynamically, so callers must write results to slot i only; the
// schedule never affects output.
void parallel_for(std::size_t count, unsigned threads,
                  const std::function<void(std::size_t)>& body);

// Fixed-shape pairwise summation; result depends only on the input order.
double pairwise_sum(std::span<const double> values);

}  // namespace fbl

#endif  // FBL_PARALLEL_H_
