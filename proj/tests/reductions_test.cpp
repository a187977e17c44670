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

#include "msca/reductions.hpp"

#include <stdexcept>

#include "doctest.h"
#include "msca/errors.hpp"
#include "msca/exact.hpp"
#include "msca/instance.hpp"

using namespace msca;

namespace {

// One weight-4 hyperedge {0,1,2} with terminals 0 and 1.
WeightedHypergraph single_edge() {
  WeightedHypergraph h;
  h.n = 3;
  h.edges.push_back({{0, 1, 2}, 4.0, 0});
  return h;
}

}  // namespace

TEST_SUITE_BEGIN("reductions");

TEST_CASE("hyperedges become priced vertices") {
  NodeWeightedGraph g = hmc_to_nwmc(single_edge(), {0, 1});
  CHECK(g.n == 4);
  CHECK(g.terminals == std::vector<int>{0, 1});
  CHECK(g.infinite[0]);
  CHECK(g.infinite[2]);  // every original vertex is undeletable
  CHECK(!g.infinite[3]);
  CHECK(g.weight[3] == doctest::Approx(4.0));
  REQUIRE(g.edges.size() == 3);  // star around the edge vertex
  CHECK_NOTHROW(g.validate());
  // Separating 0 from 1 requires deleting the edge vertex.
  CHECK(nwmc_optimum_brute(g) == doctest::Approx(4.0));
}

TEST_CASE("separation optima agree across the reduction") {
  WeightedHypergraph h = single_edge();
  ProblemInstance inst = ProblemInstance::hypergraph_mc(h, {0, 1});
  CHECK(exact_optimum(inst).cost == doctest::Approx(4.0));
  CHECK(nwmc_optimum_brute(hmc_to_nwmc(h, {0, 1})) == doctest::Approx(4.0));
}

TEST_CASE("round trip through the vertex form") {
  NodeWeightedGraph g = hmc_to_nwmc(single_edge(), {0, 1});
  HmcReduction red = nwmc_to_hmc(g);
  CHECK(red.hypergraph.n == 3);
  REQUIRE(red.hypergraph.edges.size() == 1);
  CHECK(red.hypergraph.edges[0].verts == std::vector<int>{0, 1, 2});
  CHECK(red.hypergraph.edges[0].weight == doctest::Approx(4.0));
  CHECK(red.terminals == std::vector<int>{0, 1});
}

TEST_CASE("adjacent undeletable vertices are rejected") {
  NodeWeightedGraph g;
  g.n = 2;
  g.weight = {0.0, 0.0};
  g.infinite = {1, 1};
  g.terminals = {0, 1};
  g.edges = {{0, 1}};
  CHECK_THROWS_AS(nwmc_to_hmc(g), std::invalid_argument);
}

TEST_CASE("path lengths certify distance assignments") {
  // s0 - a - s1 with deletable middle vertex a.
  NodeWeightedGraph g;
  g.n = 3;
  g.weight = {0.0, 2.0, 0.0};
  g.infinite = {1, 0, 1};
  g.terminals = {0, 2};
  g.edges = {{0, 1}, {1, 2}};
  CHECK_NOTHROW(g.validate());

  DistanceAssignment d;
  d.d = {0.0, 1.0, 0.0};
  CHECK(min_terminal_path(g, d) == doctest::Approx(1.0));
  CHECK(check_distance_feasible(g, d));
  d.d[1] = 0.5;
  CHECK(min_terminal_path(g, d) == doctest::Approx(0.5));
  CHECK(!check_distance_feasible(g, d));
}

TEST_CASE("terminal routes avoid other terminals") {
  // Triangle of terminals joined through one cheap center; the direct
  // terminal-terminal hop is not a path (terminals block traffic).
  NodeWeightedGraph g;
  g.n = 4;
  g.weight = {0.0, 0.0, 0.0, 1.0};
  g.infinite = {1, 1, 1, 0};
  g.terminals = {0, 1, 2};
  g.edges = {{0, 3}, {1, 3}, {2, 3}};
  DistanceAssignment d;
  d.d = {0.0, 0.0, 0.0, 1.0};
  CHECK(min_terminal_path(g, d) == doctest::Approx(1.0));
  CHECK(check_distance_feasible(g, d));
}

TEST_CASE("fractional solutions map to feasible distances") {
  WeightedHypergraph h = single_edge();
  ProblemInstance inst = ProblemInstance::hypergraph_mc(h, {0, 1});
  FractionalAllocation x = inst.uniform_allocation();  // free row (1/2, 1/2)
  DistanceAssignment d = map_x_to_distance(inst, x);
  REQUIRE(d.d.size() == 4);
  CHECK(d.d[3] == doctest::Approx(1.0));  // rep gap of the single edge
  CHECK(check_distance_feasible(hmc_to_nwmc(h, {0, 1}), d));
}

TEST_CASE("brute force guard on wide graphs") {
  NodeWeightedGraph g;
  g.n = 25;
  g.weight.assign(25, 1.0);
  g.infinite.assign(25, 0);
  g.infinite[0] = g.infinite[1] = 1;
  g.terminals = {0, 1};
  for (int v = 2; v < 25; ++v) g.edges.push_back({0, v});
  CHECK_THROWS_AS(nwmc_optimum_brute(g), TooLargeError);
}

TEST_SUITE_END();
