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

#include "msca/hypergraph.hpp"

#include <stdexcept>

#include "doctest.h"
#include "msca/subset.hpp"

using namespace msca;

TEST_SUITE_BEGIN("hypergraph");

TEST_CASE("validate accepts a well formed hypergraph") {
  WeightedHypergraph h;
  h.n = 4;
  h.edges.push_back({{0, 1, 3}, 2.0, 1});
  h.edges.push_back({{1, 2}, 0.5, -1});
  CHECK_NOTHROW(h.validate());
  CHECK(h.max_edge_size() == 3);
}

TEST_CASE("validate rejects malformed edges") {
  WeightedHypergraph h;
  h.n = 3;

  h.edges = {{{1, 0}, 1.0, -1}};  // unsorted
  CHECK_THROWS_AS(h.validate(), std::invalid_argument);

  h.edges = {{{0, 0, 1}, 1.0, -1}};  // duplicate vertex
  CHECK_THROWS_AS(h.validate(), std::invalid_argument);

  h.edges = {{{0, 3}, 1.0, -1}};  // out of range
  CHECK_THROWS_AS(h.validate(), std::invalid_argument);

  h.edges = {{{0, 1}, -1.0, -1}};  // negative weight
  CHECK_THROWS_AS(h.validate(), std::invalid_argument);

  h.edges = {{{0, 1}, 1.0, 2}};  // representative outside the edge
  CHECK_THROWS_AS(h.validate(), std::invalid_argument);

  h.edges = {{{0, 1}, 1.0, -1}};  // representative required but missing
  CHECK_NOTHROW(h.validate(false));
  CHECK_THROWS_AS(h.validate(true), std::invalid_argument);
}

TEST_CASE("edge queries") {
  WeightedHypergraph h;
  h.n = 5;
  h.edges.push_back({{0, 2, 4}, 1.0, -1});
  CHECK(h.edge_inside_or_outside(0, Subset::from_ids(5, {0, 2, 4})));
  CHECK(h.edge_inside_or_outside(0, Subset::from_ids(5, {1, 3})));
  CHECK(!h.edge_inside_or_outside(0, Subset::from_ids(5, {0, 1})));

  std::vector<int> label = {0, 1, 0, 1, 2};
  CHECK(h.edge_label_count(0, label) == 2);  // labels {0, 0, 2}
  label[4] = 0;
  CHECK(h.edge_label_count(0, label) == 1);
}

TEST_CASE("graph as hypergraph") {
  std::vector<std::tuple<int, int, double>> edges = {{2, 0, 1.5}, {1, 3, 2.0}};
  WeightedHypergraph h = graph_as_hypergraph(4, edges);
  CHECK(h.n == 4);
  REQUIRE(h.edges.size() == 2);
  CHECK(h.edges[0].verts == std::vector<int>{0, 2});  // sorted endpoints
  CHECK(h.edges[0].weight == doctest::Approx(1.5));
  CHECK(h.edges[1].verts == std::vector<int>{1, 3});
  CHECK_NOTHROW(h.validate());
}

TEST_SUITE_END();
