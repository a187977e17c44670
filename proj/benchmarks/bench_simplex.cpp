// Copyright 2026 The Authors.
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

// Relaxation solve cost: LP build + dense simplex against the projected
// subgradient method on the same instances.

#include <benchmark/benchmark.h>

#include "msca/generators.hpp"
#include "msca/instance.hpp"
#include "msca/relax.hpp"

namespace {

using namespace msca;

void bm_lp_graph_mc(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  ProblemInstance inst = random_graph_mc(n, 3, 0.4, 1, 10, 17);
  for (auto _ : state) {
    benchmark::DoNotOptimize(solve_lp(inst));
  }
  state.SetComplexityN(n);
}
BENCHMARK(bm_lp_graph_mc)->DenseRange(6, 18, 4)->Complexity()
    ->Unit(benchmark::kMillisecond);

void bm_lp_sublabel(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  ProblemInstance inst = random_sublabel(n, 4, n, 3, true, 23);
  for (auto _ : state) {
    benchmark::DoNotOptimize(solve_lp(inst));
  }
  state.SetComplexityN(n);
}
BENCHMARK(bm_lp_sublabel)->DenseRange(6, 18, 4)->Complexity()
    ->Unit(benchmark::kMillisecond);

void bm_subgradient_graph_mc(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  ProblemInstance inst = random_graph_mc(n, 3, 0.4, 1, 10, 17);
  SubgradientOptions opts;
  opts.max_iters = 200;
  for (auto _ : state) {
    benchmark::DoNotOptimize(solve_subgradient(inst, opts));
  }
  state.SetComplexityN(n);
}
BENCHMARK(bm_subgradient_graph_mc)->DenseRange(6, 18, 4)->Complexity()
    ->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
