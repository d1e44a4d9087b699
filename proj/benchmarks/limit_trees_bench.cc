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


#include <benchmark/benchmark.h>

#include "fbl/kernel.h"
#include "fbl/limit_trees.h"
#include "fbl/offspring_law.h"
#include "fbl/rng.h"

namespace {

void BM_GwDraw(benchmark::State& state) {
  fbl::Rng rng(1);
  auto law = fbl::OffspringLaw::poisson(2.0);
  fbl::GwSampler sampler(law, law);
  for (auto _ : state) benchmark::DoNotOptimize(sampler.draw(rng));
}
BENCHMARK(BM_GwDraw);

void BM_GwDrawZeta(benchmark::State& state) {
  fbl::Rng rng(2);
  auto law = fbl::OffspringLaw::zeta(3.5);
  fbl::GwSampler sampler(law, law.size_biased());
  for (auto _ : state) benchmark::DoNotOptimize(sampler.draw(rng));
}
BENCHMARK(BM_GwDrawZeta);

void BM_IerDraw(benchmark::State& state) {
  fbl::Rng rng(3);
  fbl::IerSampler sampler(2.0, fbl::KernelFunction::piecewise_constant({0.0, 0.5, 1.0}, {1.0, 2.0}));
  for (auto _ : state) benchmark::DoNotOptimize(sampler.draw(rng));
}
BENCHMARK(BM_IerDraw);

void BM_PolyaDraw(benchmark::State& state) {
  fbl::Rng rng(4);
  fbl::PolyaSampler sampler(static_cast<double>(state.range(0)) / 2.0);
  for (auto _ : state) benchmark::DoNotOptimize(sampler.draw(rng));
}
BENCHMARK(BM_PolyaDraw)->Arg(-1)->Arg(0)->Arg(4);

}  // namespace
