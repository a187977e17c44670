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

// Extension evaluation and subgradient cost across oracle families and
// ground-set sizes.  The sort dominates for cheap oracles; cut oracles
// shift the balance toward the n+1 set evaluations.

#include <benchmark/benchmark.h>

#include <tuple>
#include <vector>

#include "msca/lovasz.hpp"
#include "msca/oracle.hpp"
#include "msca/rng.hpp"

namespace {

using namespace msca;

std::vector<double> random_point(int n, Rng& rng) {
  std::vector<double> x(n);
  for (double& v : x) v = rng.next_unit();
  return x;
}

OraclePtr modular_oracle(int n, Rng& rng) {
  std::vector<double> w(n);
  for (double& v : w) v = rng.next_unit() * 10.0;
  return make_modular(w);
}

OraclePtr cut_oracle(int n, Rng& rng) {
  std::vector<std::tuple<int, int, double>> edges;
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      if (rng.next_unit() < 8.0 / n) edges.emplace_back(a, b, 1.0 + rng.next_unit());
    }
  }
  return make_graph_cut(n, edges);
}

void bm_eval_modular(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  Rng rng(1);
  OraclePtr f = modular_oracle(n, rng);
  std::vector<double> x = random_point(n, rng);
  for (auto _ : state) {
    benchmark::DoNotOptimize(lovasz_eval(*f, x));
  }
  state.SetComplexityN(n);
}
BENCHMARK(bm_eval_modular)->RangeMultiplier(4)->Range(8, 2048)->Complexity();

void bm_eval_cut(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  Rng rng(2);
  OraclePtr f = cut_oracle(n, rng);
  std::vector<double> x = random_point(n, rng);
  for (auto _ : state) {
    benchmark::DoNotOptimize(lovasz_eval(*f, x));
  }
  state.SetComplexityN(n);
}
BENCHMARK(bm_eval_cut)->RangeMultiplier(4)->Range(8, 512)->Complexity();

void bm_subgradient_cut(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  Rng rng(3);
  OraclePtr f = cut_oracle(n, rng);
  std::vector<double> x = random_point(n, rng);
  for (auto _ : state) {
    benchmark::DoNotOptimize(lovasz_subgradient(*f, x));
  }
  state.SetComplexityN(n);
}
BENCHMARK(bm_subgradient_cut)->RangeMultiplier(4)->Range(8, 512)->Complexity();

void bm_eval_facility(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  Rng rng(4);
  std::vector<double> connect(n);
  for (double& v : connect) v = rng.next_unit();
  OraclePtr f = make_facility(5.0, connect);
  std::vector<double> x = random_point(n, rng);
  for (auto _ : state) {
    benchmark::DoNotOptimize(lovasz_eval(*f, x));
  }
  state.SetComplexityN(n);
}
BENCHMARK(bm_eval_facility)->RangeMultiplier(4)->Range(8, 2048)->Complexity();

}  // namespace

BENCHMARK_MAIN();
