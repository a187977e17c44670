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

#include "msca/lovasz.hpp"

#include <cmath>

#include "doctest.h"
#include "msca/oracle.hpp"
#include "msca/rng.hpp"

using namespace msca;

TEST_SUITE_BEGIN("lovasz");

TEST_CASE("threshold sets") {
  std::vector<double> x = {0.2, 0.8, 0.5};
  CHECK(threshold_set(x, 0.5).ids() == std::vector<int>{1, 2});
  CHECK(threshold_set(x, 0.81).ids() == std::vector<int>{});
  CHECK(threshold_set(x, 0.0).is_full());
}

TEST_CASE("extension of a modular oracle is the dot product") {
  OraclePtr f = make_modular({2.0, 3.0, 5.0});
  std::vector<double> x = {0.1, 0.9, 0.4};
  CHECK(lovasz_eval(*f, x) == doctest::Approx(0.2 + 2.7 + 2.0));
}

TEST_CASE("extension agrees with the oracle on indicator vectors") {
  OraclePtr f = make_graph_cut(4, {{0, 1, 1.0}, {1, 2, 2.0}, {2, 3, 1.0}});
  CHECK(lovasz_eval(*f, {1, 0, 1, 0}) ==
        doctest::Approx((*f)(Subset::from_ids(4, {0, 2}))));
  CHECK(lovasz_eval(*f, {0, 0, 0, 0}) == doctest::Approx(0.0));
  CHECK(lovasz_eval(*f, {1, 1, 1, 1}) == doctest::Approx(0.0));
}

TEST_CASE("single edge extension values") {
  OraclePtr f = make_graph_cut(2, {{0, 1, 1.0}});
  // Sorted-prefix accumulation: (1 - 0.8) * f(empty) + (0.8 - 0.3) * f({0})
  // + 0.3 * f(V) = 0.5.
  CHECK(lovasz_eval(*f, {0.8, 0.3}) == doctest::Approx(0.5));
  CHECK(lovasz_eval(*f, {0.5, 0.5}) == doctest::Approx(0.0));
  CHECK(lovasz_eval(*f, {1.0, 0.0}) == doctest::Approx(1.0));
}

TEST_CASE("subgradient supports the extension") {
  OraclePtr f = make_graph_cut(3, {{0, 1, 1.0}, {1, 2, 1.0}, {0, 2, 1.0}});
  Rng rng(7);
  for (int t = 0; t < 50; ++t) {
    std::vector<double> x(3);
    for (double& v : x) v = rng.next_unit();
    std::vector<double> g = lovasz_subgradient(*f, x);
    double dot = 0.0;
    for (int v = 0; v < 3; ++v) dot += g[v] * x[v];
    CHECK(dot == doctest::Approx(lovasz_eval(*f, x)));
    // Supporting hyperplane property at a second point.
    std::vector<double> y(3);
    for (double& v : y) v = rng.next_unit();
    double shifted = lovasz_eval(*f, x);
    for (int v = 0; v < 3; ++v) shifted += g[v] * (y[v] - x[v]);
    CHECK(lovasz_eval(*f, y) >= shifted - 1e-9);
  }
}

TEST_CASE("modular subgradient is the weight vector") {
  OraclePtr f = make_modular({4.0, 1.0});
  std::vector<double> g = lovasz_subgradient(*f, {0.3, 0.7});
  CHECK(g[0] == doctest::Approx(4.0));
  CHECK(g[1] == doctest::Approx(1.0));
}

TEST_CASE("edge distance helpers") {
  Hyperedge e{{0, 1, 2}, 1.0, 1};
  FractionalAllocation x(3, 2);
  x.set(0, 0, 1.0);
  x.set(1, 0, 0.6);
  x.set(1, 1, 0.4);
  x.set(2, 1, 1.0);
  CHECK(edge_spread(e, x, 0) == doctest::Approx(1.0));
  CHECK(edge_spread(e, x, 1) == doctest::Approx(1.0));
  CHECK(edge_spread_total(e, x) == doctest::Approx(2.0));
  CHECK(edge_rep_gap(e, x, 0) == doctest::Approx(0.6));
  CHECK(edge_rep_gap(e, x, 1) == doctest::Approx(0.4));
  CHECK(edge_rep_gap_total(e, x) == doctest::Approx(1.0));
  auto [lo, hi] = edge_interval(e, x, 0);
  CHECK(lo == doctest::Approx(0.0));
  CHECK(hi == doctest::Approx(1.0));
}

TEST_CASE("instance objective sums per label extensions") {
  ProblemInstance inst =
      ProblemInstance::graph_mc(4, {{0, 1, 1.0}, {0, 2, 1.0}, {0, 3, 1.0}}, {1, 2, 3});
  // Any feasible center row yields total 2 on the unit star.
  FractionalAllocation x = inst.uniform_allocation();
  CHECK(objective(inst, x) == doctest::Approx(2.0));
  x.set_row(0, {0.6, 0.3, 0.1});
  CHECK(objective(inst, x) == doctest::Approx(2.0));
  x.set_row(0, {1.0, 0.0, 0.0});
  CHECK(objective(inst, x) == doctest::Approx(2.0));
  CHECK(objective(inst, x) == doctest::Approx(inst.cost(Partition{{0, 0, 1, 2}, 3})));
}

TEST_SUITE_END();
