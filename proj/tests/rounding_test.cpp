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

#include "msca/rounding.hpp"

#include "doctest.h"
#include "msca/generators.hpp"
#include "msca/lovasz.hpp"
#include "msca/oracle.hpp"
#include "msca/relax.hpp"
#include "msca/rng.hpp"

using namespace msca;

TEST_SUITE_BEGIN("rounding");

TEST_CASE("theta level sets") {
  FractionalAllocation x(3, 2);
  x.set(0, 0, 0.8);
  x.set(0, 1, 0.2);
  x.set(1, 0, 0.3);
  x.set(1, 1, 0.7);
  x.set(2, 1, 1.0);
  CHECK(theta_round(x, 0, 0.5).ids() == std::vector<int>{0});
  CHECK(theta_round(x, 0, 0.3).ids() == std::vector<int>{0, 1});
  CHECK(theta_round(x, 1, 1.0).ids() == std::vector<int>{2});
  // Zero entries never qualify, even at theta = 0.
  CHECK(theta_round(x, 0, 0.0).ids() == std::vector<int>{0, 1});
}

TEST_CASE("integral input is a fixed point of every rounder") {
  ProblemInstance inst =
      ProblemInstance::graph_mc(4, {{0, 1, 1.0}, {0, 2, 1.0}, {1, 3, 2.0}}, {2, 3});
  Partition p{{1, 0, 0, 1}, 2};
  FractionalAllocation x = FractionalAllocation::from_partition(p);
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    Rng r1(seed), r2(seed), r3(seed), r4(seed);
    CHECK(kt_round(inst, x, r1).partition.label == p.label);
    CHECK(ckr_round(inst, x, r2).partition.label == p.label);
    CHECK(half_round(inst, x, r3).partition.label == p.label);
    CHECK(sym_submp_round(inst, x, r4, SymVariant::Plain).partition.label == p.label);
  }
  Rng r(0);
  RoundingOutcome o = kt_round(inst, x, r);
  CHECK(o.cost == doctest::Approx(inst.cost(p)));
  CHECK(!o.used_fallback);
}

TEST_CASE("rounders honor pins and forbidden pairs") {
  LabelingInstance lab;
  lab.assignment = {make_modular({1, 1, 1, 1}), make_modular({1, 1, 1, 1}),
                    make_modular({1, 1, 1, 1})};
  WeightedHypergraph h;
  h.n = 4;
  h.edges.push_back({{0, 1, 2, 3}, 1.0, 0});
  lab.coupling = make_hypergraph_separation(h);
  ProblemInstance inst = ProblemInstance::sublabel(lab, {{0, 1}, {2, 0}, {2, 1}}, h);
  Rng xr(9);
  for (int t = 0; t < 30; ++t) {
    FractionalAllocation x = random_feasible_allocation(inst, xr);
    Rng r1(t), r2(t), r3(t), r4(t);
    for (const RoundingOutcome& o :
         {kt_round(inst, x, r1), ckr_round(inst, x, r2), half_round(inst, x, r3),
          sym_sublabel_round(inst, x, r4)}) {
      CHECK(inst.partition_feasible(o.partition));
      CHECK(o.partition.label[2] == 2);  // only allowed label
    }
  }
}

TEST_CASE("sampled rounding is deterministic in the rng state") {
  ProblemInstance inst = random_hypergraph(6, 3, 4, 3, ProblemKind::HypergraphMP, 21);
  FractionalAllocation x = inst.uniform_allocation();
  Rng a(123), b(123);
  RoundingOutcome oa = kt_round(inst, x, a);
  RoundingOutcome ob = kt_round(inst, x, b);
  CHECK(oa.partition.label == ob.partition.label);
  CHECK(oa.rounds == ob.rounds);
  CHECK(oa.assigned_round == ob.assigned_round);
}

TEST_CASE("ratio greedy follows the cheapest level sets") {
  auto f0 = make_modular({1.0, 2.0, 100.0});
  auto f1 = make_modular({50.0, 3.0, 4.0});
  ProblemInstance inst = ProblemInstance::msca({f0, f1});
  FractionalAllocation x(3, 2);
  x.set_row(0, {0.9, 0.1});
  x.set_row(1, {0.6, 0.4});
  x.set_row(2, {0.2, 0.8});
  RoundingOutcome o = monotone_greedy(inst, x, /*trace=*/true);
  // Picks {0} at ratio 1, then {1} at ratio 2, then {2} on label 1 at 4.
  CHECK(o.partition.label == std::vector<int>{0, 0, 1});
  CHECK(o.cost == doctest::Approx(7.0));
  REQUIRE(o.trace.size() == 3);
  CHECK(o.trace[0].stage == "pick");
  CHECK(o.trace[0].members == std::vector<int>{0});
  CHECK(o.trace[1].members == std::vector<int>{1});
  CHECK(o.trace[2].label == 1);
}

TEST_CASE("greedy is deterministic and feasible with pins") {
  ProblemInstance inst = random_graph_mc(6, 3, 0.7, 1, 5, 77);
  LpSolveResult lp = solve_lp(inst);
  RoundingOutcome a = monotone_greedy(inst, lp.x);
  RoundingOutcome b = monotone_greedy(inst, lp.x);
  CHECK(a.partition.label == b.partition.label);
  CHECK(inst.partition_feasible(a.partition));
}

TEST_CASE("uncrossing a crossing pair") {
  // Path 0-1-2; sets {0,1} and {1,2} cross at 1.
  OraclePtr f = make_graph_cut(3, {{0, 1, 1.0}, {1, 2, 1.0}});
  std::vector<Subset> sets = {Subset::from_ids(3, {0, 1}), Subset::from_ids(3, {1, 2})};
  std::vector<Subset> out = uncross(*f, sets);
  CHECK(out[0].ids() == std::vector<int>{0, 1});
  CHECK(out[1].ids() == std::vector<int>{2});
  // Cost did not increase: 1 + 1 <= 1 + 1.
  CHECK((*f)(out[0]) + (*f)(out[1]) <= (*f)(sets[0]) + (*f)(sets[1]) + 1e-12);
}

TEST_CASE("uncross leaves disjoint families alone") {
  OraclePtr f = make_graph_cut(4, {{0, 1, 1.0}, {2, 3, 1.0}});
  std::vector<Subset> sets = {Subset::from_ids(4, {0}), Subset::from_ids(4, {2, 3})};
  std::vector<Subset> out = uncross(*f, sets);
  CHECK(out[0] == sets[0]);
  CHECK(out[1] == sets[1]);
}

TEST_CASE("shared threshold rounding variants") {
  ProblemInstance inst = random_hypergraph(6, 3, 4, 3, ProblemKind::HypergraphMP, 31);
  Rng xr(5);
  FractionalAllocation x = random_feasible_allocation(inst, xr);
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    Rng r1(seed), r2(seed);
    RoundingOutcome plain = sym_submp_round(inst, x, r1, SymVariant::Plain);
    RoundingOutcome relabel = sym_submp_round(inst, x, r2, SymVariant::Relabel);
    CHECK(inst.partition_feasible(plain.partition));
    CHECK(inst.partition_feasible(relabel.partition));
    CHECK(plain.cost == doctest::Approx(inst.cost(plain.partition)));
    CHECK(relabel.cost == doctest::Approx(inst.cost(relabel.partition)));
  }
}

TEST_CASE("relabel reserves the largest extension label") {
  ProblemInstance inst = random_hypergraph(5, 3, 4, 3, ProblemKind::HypergraphMP, 57);
  FractionalAllocation x = inst.uniform_allocation();
  const SubmodularOracle& f = *inst.label_oracle(0);
  int expect = 0;
  double best = -1.0;
  for (int i = 0; i < inst.k(); ++i) {
    double v = lovasz_eval(f, x.column(i));
    if (v >= best) {  // ties toward the larger index
      best = v;
      expect = i;
    }
  }
  Rng r(4);
  RoundingOutcome o = sym_submp_round(inst, x, r, SymVariant::Relabel, /*trace=*/true);
  REQUIRE(!o.trace.empty());
  int remainder_label = -1;
  for (const TraceRecord& t : o.trace) {
    if (t.stage == "remainder") remainder_label = t.label;
  }
  CHECK(remainder_label == expect);
}

TEST_CASE("instance free permutation rounding") {
  FractionalAllocation x(2, 5);
  x.set_row(0, {0.2, 0.2, 0.2, 0.2, 0.2});
  x.set_row(1, {1.0, 0.0, 0.0, 0.0, 0.0});
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    Rng r(seed);
    Partition p = ckr_partition(x, r);
    CHECK(p.k == 5);
    CHECK(p.label[1] == 0);  // integral row is certain
    CHECK(p.label[0] >= 0);
    CHECK(p.label[0] < 5);
  }
}

TEST_CASE("trace records the sampling loop") {
  ProblemInstance inst = random_hypergraph(5, 2, 3, 3, ProblemKind::HypergraphMP, 8);
  FractionalAllocation x = inst.uniform_allocation();
  Rng r(2);
  RoundingOutcome o = kt_round(inst, x, r, /*trace=*/true);
  CHECK(!o.trace.empty());
  int round_records = 0;
  for (const TraceRecord& t : o.trace) {
    if (t.stage == "round") ++round_records;
  }
  CHECK(round_records == o.rounds);
  CHECK(static_cast<int>(o.assigned_round.size()) == inst.n());
}

TEST_SUITE_END();
