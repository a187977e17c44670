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

#include "msca/generators.hpp"

#include <stdexcept>

#include "doctest.h"
#include "msca/lovasz.hpp"
#include "msca/oracle.hpp"
#include "msca/rng.hpp"

using namespace msca;

TEST_SUITE_BEGIN("generators");

TEST_CASE("graph multiway cut generator shape") {
  ProblemInstance inst = random_graph_mc(7, 3, 0.5, 1, 5, 4);
  CHECK(inst.kind() == ProblemKind::HypergraphMP);
  CHECK(inst.cut_scale() == doctest::Approx(0.5));
  CHECK(inst.n() == 7);
  CHECK(inst.k() == 3);
  CHECK(inst.terminals().size() == 3);
  const WeightedHypergraph* h = inst.hypergraph();
  REQUIRE(h != nullptr);
  for (const Hyperedge& e : h->edges) {
    CHECK(e.verts.size() == 2);
    CHECK(e.weight >= 1.0);
    CHECK(e.weight <= 5.0);
  }
  // Same seed reproduces the instance.
  ProblemInstance again = random_graph_mc(7, 3, 0.5, 1, 5, 4);
  CHECK(inst.hypergraph()->edges.size() == again.hypergraph()->edges.size());
}

TEST_CASE("hypergraph generator shape") {
  ProblemInstance mp = random_hypergraph(8, 3, 5, 4, ProblemKind::HypergraphMP, 10);
  CHECK(mp.kind() == ProblemKind::HypergraphMP);
  CHECK_NOTHROW(mp.hypergraph()->validate());
  CHECK(mp.hypergraph()->max_edge_size() <= 4);
  CHECK(mp.hypergraph()->edges.size() == 5);

  ProblemInstance mc = random_hypergraph(8, 3, 5, 4, ProblemKind::HypergraphMC, 10);
  CHECK(mc.kind() == ProblemKind::HypergraphMC);
  CHECK_NOTHROW(mc.hypergraph()->validate(/*require_reps=*/true));
}

TEST_CASE("labeling generator constraints") {
  ProblemInstance inst = random_sublabel(7, 4, 4, 3, true, 2);
  CHECK(inst.kind() == ProblemKind::SubLabel);
  for (int v = 0; v < inst.n(); ++v) CHECK(inst.allowed_count(v) >= 1);
  for (int i = 0; i < inst.k(); ++i) {
    CHECK(inst.labeling().assignment[i]->claims_monotone());
  }
  // Separation coupling keeps representatives on the edges.
  CHECK_NOTHROW(inst.hypergraph()->validate(/*require_reps=*/true));
  ProblemInstance cut = random_sublabel(7, 4, 4, 3, false, 2);
  CHECK(cut.hypergraph()->edges[0].rep == -1);
}

TEST_CASE("monotone generator produces monotone submodular oracles") {
  ProblemInstance inst = random_monotone_msca(6, 3, 77);
  for (int i = 0; i < inst.k(); ++i) {
    const SubmodularOracle& f = *inst.label_oracle(i);
    CHECK(check_monotone(f));
    CHECK(check_submodular(f));
  }
}

TEST_CASE("random feasible allocations are feasible") {
  ProblemInstance inst = random_sublabel(6, 3, 3, 3, true, 31);
  Rng rng(8);
  for (int t = 0; t < 20; ++t) {
    FractionalAllocation x = random_feasible_allocation(inst, rng);
    CHECK(inst.allocation_feasible(x));
    CHECK(x.rows_stochastic());
  }
  ProblemInstance pinned = random_graph_mc(6, 3, 0.6, 1, 4, 9);
  for (int t = 0; t < 20; ++t) {
    FractionalAllocation x = random_feasible_allocation(pinned, rng);
    CHECK(pinned.allocation_feasible(x));
    CHECK(x(pinned.terminals()[1], 1) == doctest::Approx(1.0));
  }
}

TEST_CASE("worst case family closed forms") {
  GapExample tri = gen_gap_example(3, 2);
  CHECK(tri.instance.n() == 3);
  CHECK(tri.instance.k() == 3);
  CHECK(tri.instance.hypergraph()->edges.size() == 3);  // all pairs
  CHECK(tri.claimed_integral_optimum == doctest::Approx(2.0));
  CHECK(tri.claimed_candidate_cost == doctest::Approx(1.5));
  CHECK(tri.claimed_ratio == doctest::Approx(2.0 * (1.0 - 1.0 / 3)));
  CHECK(tri.candidate.rows_stochastic());
  CHECK(tri.candidate(0, 0) == doctest::Approx(0.0));  // barred diagonal
  CHECK(tri.candidate(0, 1) == doctest::Approx(0.5));
  CHECK(tri.instance.is_forbidden(1, 1));

  GapExample big = gen_gap_example(5, 3);
  CHECK(big.instance.hypergraph()->edges.size() == 10);  // C(5,3)
  CHECK(big.claimed_integral_optimum == doctest::Approx(6.0));   // C(4,2)
  CHECK(big.claimed_candidate_cost == doctest::Approx(2.5));     // C(5,3)/4
  CHECK(big.claimed_ratio == doctest::Approx(2.4));
}

TEST_CASE("staircase edge construction") {
  CkrTightEdge t = gen_ckr_tight_edge(3, 3, 0.1);
  CHECK(t.edge_distance == doctest::Approx(0.1));
  CHECK(t.instance.n() == 6);  // 3 terminals + 3 edge members
  CHECK(t.x.rows_stochastic());
  // Terminal rows are unit vectors.
  CHECK(t.x(0, 0) == doctest::Approx(1.0));
  CHECK(t.x(1, 1) == doctest::Approx(1.0));
  // The three staircase rows, label by label.
  CHECK(t.x(3, 0) == doctest::Approx(0.9));
  CHECK(t.x(3, 1) == doctest::Approx(0.1));
  CHECK(t.x(3, 2) == doctest::Approx(0.0));
  CHECK(t.x(4, 0) == doctest::Approx(0.8));
  CHECK(t.x(4, 1) == doctest::Approx(0.2));
  CHECK(t.x(5, 0) == doctest::Approx(0.8));
  CHECK(t.x(5, 2) == doctest::Approx(0.1));
  // The allocation's representative gap equals the stated distance.
  const Hyperedge& e = t.instance.hypergraph()->edges[0];
  CHECK(edge_rep_gap_total(e, t.x) == doctest::Approx(0.1));
}

TEST_CASE("generator guard rails") {
  CHECK_THROWS_AS(gen_gap_example(2, 3), std::invalid_argument);
  CHECK_THROWS_AS(gen_ckr_tight_edge(1, 3, 0.1), std::invalid_argument);
  CHECK_THROWS_AS(gen_ckr_tight_edge(3, 2, 0.1), std::invalid_argument);
  CHECK_THROWS_AS(gen_ckr_tight_edge(3, 3, 0.5), std::invalid_argument);
}

TEST_SUITE_END();
