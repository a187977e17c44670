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

// Per-trial rounding cost on a solved mid-size cut instance.  The RNG is
// reseeded per iteration so every trial draws the same stream; measured
// time is one full trial including the final cost evaluation.

#include <benchmark/benchmark.h>

#include "msca/generators.hpp"
#include "msca/relax.hpp"
#include "msca/rng.hpp"
#include "msca/rounding.hpp"

namespace {

using namespace msca;

struct Setup {
  ProblemInstance inst;
  FractionalAllocation x;
};

Setup solved_graph_mc(int n) {
  ProblemInstance inst = random_graph_mc(n, 4, 0.4, 1, 10, 31);
  FractionalAllocation x = solve_lp(inst).x;
  return {std::move(inst), std::move(x)};
}

Setup solved_sublabel(int n) {
  ProblemInstance inst = random_sublabel(n, 4, n, 3, true, 37);
  FractionalAllocation x = solve_lp(inst).x;
  return {std::move(inst), std::move(x)};
}

void bm_round_kt(benchmark::State& state) {
  Setup s = solved_graph_mc(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    Rng rng(11);
    benchmark::DoNotOptimize(kt_round(s.inst, s.x, rng));
  }
}
BENCHMARK(bm_round_kt)->Arg(10)->Arg(16);

void bm_round_ckr(benchmark::State& state) {
  Setup s = solved_graph_mc(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    Rng rng(12);
    benchmark::DoNotOptimize(ckr_round(s.inst, s.x, rng));
  }
}
BENCHMARK(bm_round_ckr)->Arg(10)->Arg(16);

void bm_round_half(benchmark::State& state) {
  Setup s = solved_graph_mc(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    Rng rng(13);
    benchmark::DoNotOptimize(half_round(s.inst, s.x, rng));
  }
}
BENCHMARK(bm_round_half)->Arg(10)->Arg(16);

void bm_round_greedy(benchmark::State& state) {
  Setup s = solved_graph_mc(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(monotone_greedy(s.inst, s.x));
  }
}
BENCHMARK(bm_round_greedy)->Arg(10)->Arg(16);

void bm_round_sublabel(benchmark::State& state) {
  Setup s = solved_sublabel(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    Rng rng(14);
    benchmark::DoNotOptimize(sym_sublabel_round(s.inst, s.x, rng));
  }
}
BENCHMARK(bm_round_sublabel)->Arg(10)->Arg(16);

}  // namespace

BENCHMARK_MAIN();
