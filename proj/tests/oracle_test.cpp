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

#include "msca/oracle.hpp"

#include "doctest.h"
#include "msca/hypergraph.hpp"
#include "msca/subset.hpp"

using namespace msca;

TEST_SUITE_BEGIN("oracle");

TEST_CASE("modular oracle") {
  OraclePtr f = make_modular({1.0, 2.0, 4.0});
  CHECK((*f)(Subset::empty_set(3)) == doctest::Approx(0.0));
  CHECK((*f)(Subset::from_ids(3, {0, 2})) == doctest::Approx(5.0));
  CHECK((*f)(Subset::full_set(3)) == doctest::Approx(7.0));
  CHECK(f->claims_monotone());
  CHECK(check_submodular(*f));
  CHECK(check_monotone(*f));
  CHECK(f->family() == "modular");
}

TEST_CASE("graph cut oracle") {
  // Unit triangle.
  OraclePtr f = make_graph_cut(3, {{0, 1, 1.0}, {1, 2, 1.0}, {0, 2, 1.0}});
  CHECK((*f)(Subset::empty_set(3)) == doctest::Approx(0.0));
  CHECK((*f)(Subset::singleton(3, 0)) == doctest::Approx(2.0));
  CHECK((*f)(Subset::from_ids(3, {0, 1})) == doctest::Approx(2.0));
  CHECK((*f)(Subset::full_set(3)) == doctest::Approx(0.0));
  CHECK(f->claims_symmetric());
  CHECK(check_submodular(*f));
  CHECK(check_symmetric(*f));
  CHECK(!check_monotone(*f));
}

TEST_CASE("hypergraph cut oracle with scale") {
  WeightedHypergraph h;
  h.n = 4;
  h.edges.push_back({{0, 1, 2}, 2.0, -1});
  h.edges.push_back({{2, 3}, 3.0, -1});
  OraclePtr f = make_hypergraph_cut(h, 0.5);
  // An edge is charged w * scale whenever S splits it.
  CHECK((*f)(Subset::singleton(4, 0)) == doctest::Approx(1.0));
  CHECK((*f)(Subset::from_ids(4, {0, 1, 2})) == doctest::Approx(1.5));
  CHECK((*f)(Subset::from_ids(4, {2, 3})) == doctest::Approx(1.0));
  CHECK((*f)(Subset::full_set(4)) == doctest::Approx(0.0));
  CHECK(check_submodular(*f));
  CHECK(check_symmetric(*f));
}

TEST_CASE("hypergraph separation oracle") {
  WeightedHypergraph h;
  h.n = 3;
  h.edges.push_back({{0, 1, 2}, 3.0, 0});
  OraclePtr f = make_hypergraph_separation(h);
  // Charged at the representative's side only, and only when split.
  CHECK((*f)(Subset::singleton(3, 0)) == doctest::Approx(3.0));
  CHECK((*f)(Subset::from_ids(3, {0, 1})) == doctest::Approx(3.0));
  CHECK((*f)(Subset::full_set(3)) == doctest::Approx(0.0));
  CHECK((*f)(Subset::singleton(3, 1)) == doctest::Approx(0.0));
  CHECK((*f)(Subset::from_ids(3, {1, 2})) == doctest::Approx(0.0));
  CHECK(check_submodular(*f));
  CHECK(!check_symmetric(*f));
}

TEST_CASE("facility oracle") {
  OraclePtr f = make_facility(5.0, {1.0, 2.0, 3.0});
  CHECK((*f)(Subset::empty_set(3)) == doctest::Approx(0.0));
  CHECK((*f)(Subset::singleton(3, 1)) == doctest::Approx(7.0));
  CHECK((*f)(Subset::full_set(3)) == doctest::Approx(11.0));
  CHECK(check_submodular(*f));
  CHECK(check_monotone(*f));
}

TEST_CASE("coverage oracle") {
  OraclePtr f = make_coverage({{0, 1}, {1, 2}, {}}, {2.0, 3.0, 5.0});
  CHECK((*f)(Subset::empty_set(3)) == doctest::Approx(0.0));
  CHECK((*f)(Subset::singleton(3, 0)) == doctest::Approx(5.0));
  CHECK((*f)(Subset::from_ids(3, {0, 1})) == doctest::Approx(10.0));
  CHECK((*f)(Subset::singleton(3, 2)) == doctest::Approx(0.0));
  CHECK(check_submodular(*f));
  CHECK(check_monotone(*f));
}

TEST_CASE("sum oracle") {
  OraclePtr a = make_modular({1.0, 0.0, 0.0});
  OraclePtr b = make_graph_cut(3, {{0, 1, 2.0}});
  OraclePtr f = make_sum({a, b});
  CHECK((*f)(Subset::singleton(3, 0)) == doctest::Approx(3.0));
  CHECK((*f)(Subset::full_set(3)) == doctest::Approx(1.0));
  CHECK(check_submodular(*f));
}

TEST_CASE("terminal contraction") {
  // Path 0-1-2, contract terminal 0: ground becomes {old 1, old 2}.
  OraclePtr f = make_graph_cut(3, {{0, 1, 1.0}, {1, 2, 1.0}});
  OraclePtr g = contract_terminal(f, 0);
  CHECK(g->n() == 2);
  // g(S) = f(S + old0): empty -> f({0}) = 1.
  CHECK((*g)(Subset::empty_set(2)) == doctest::Approx(1.0));
  CHECK((*g)(Subset::singleton(2, 0)) == doctest::Approx(1.0));   // f({0,1})
  CHECK((*g)(Subset::singleton(2, 1)) == doctest::Approx(2.0));   // f({0,2})
  CHECK((*g)(Subset::full_set(2)) == doctest::Approx(0.0));       // f(V)
}

TEST_CASE("table oracle and property checks") {
  // Mask-indexed OR function: submodular, monotone.
  OraclePtr f = make_table(2, {0.0, 1.0, 1.0, 1.0}, true, false);
  CHECK((*f)(Subset::from_mask(2, 0b01)) == doctest::Approx(1.0));
  CHECK(check_submodular(*f));
  CHECK(check_monotone(*f));
  // AND function violates submodularity: f(a) + f(b) < f(ab) + f(empty).
  OraclePtr g = make_table(2, {0.0, 0.0, 0.0, 1.0});
  CHECK(!check_submodular(*g));
  CHECK(check_monotone(*g));
}

TEST_SUITE_END();
