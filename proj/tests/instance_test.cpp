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

#include "msca/instance.hpp"

#include <stdexcept>

#include "doctest.h"
#include "msca/errors.hpp"
#include "msca/oracle.hpp"

using namespace msca;

TEST_SUITE_BEGIN("instance");

TEST_CASE("partition helpers") {
  Partition p{{0, 1, 0, 2}, 3};
  CHECK(p.n() == 4);
  CHECK(p.members(0).ids() == std::vector<int>{0, 2});
  CHECK(p.members(2).ids() == std::vector<int>{3});
  CHECK_NOTHROW(p.validate());
  p.label[1] = 3;
  CHECK_THROWS_AS(p.validate(), std::invalid_argument);
}

TEST_CASE("allocation basics") {
  FractionalAllocation u = FractionalAllocation::uniform(2, 4);
  CHECK(u.rows_stochastic());
  CHECK(u(1, 3) == doctest::Approx(0.25));

  Partition p{{1, 0}, 2};
  FractionalAllocation x = FractionalAllocation::from_partition(p);
  CHECK(x.integral());
  CHECK(x(0, 1) == doctest::Approx(1.0));
  CHECK(x.to_partition().label == p.label);
  CHECK(x.column(0) == std::vector<double>{0.0, 1.0});

  x.set(0, 1, 0.5);
  CHECK(!x.rows_stochastic());
  CHECK(x.max_row_sum_error() == doctest::Approx(0.5));
}

TEST_CASE("msca instance") {
  auto f0 = make_modular({1.0, 5.0});
  auto f1 = make_modular({4.0, 2.0});
  ProblemInstance inst = ProblemInstance::msca({f0, f1});
  CHECK(inst.kind() == ProblemKind::Msca);
  CHECK(inst.n() == 2);
  CHECK(inst.k() == 2);
  CHECK(!inst.has_terminals());
  CHECK(inst.cost(Partition{{0, 1}, 2}) == doctest::Approx(3.0));
  CHECK(inst.cost(Partition{{1, 0}, 2}) == doctest::Approx(9.0));
}

TEST_CASE("graph multiway cut instance") {
  // Unit star: center 0, terminal leaves 1..3.
  ProblemInstance inst =
      ProblemInstance::graph_mc(4, {{0, 1, 1.0}, {0, 2, 1.0}, {0, 3, 1.0}}, {1, 2, 3});
  CHECK(inst.kind() == ProblemKind::HypergraphMP);
  CHECK(inst.cut_scale() == doctest::Approx(0.5));
  CHECK(inst.k() == 3);
  CHECK(inst.pinned_label(1) == 0);
  CHECK(inst.pinned_label(0) == -1);
  CHECK(inst.free_count() == 1);
  CHECK(inst.is_forbidden(1, 2));
  CHECK(!inst.is_forbidden(0, 2));
  // Center with terminal 1 cuts two unit edges.
  CHECK(inst.cost(Partition{{0, 0, 1, 2}, 3}) == doctest::Approx(2.0));
  CHECK(!inst.partition_feasible(Partition{{0, 1, 1, 2}, 3}));  // moves a terminal
  CHECK(inst.partition_feasible(Partition{{2, 0, 1, 2}, 3}));
}

TEST_CASE("shared cost instance uses one oracle for all parts") {
  OraclePtr f = make_graph_cut(3, {{0, 1, 1.0}, {1, 2, 1.0}});
  ProblemInstance inst = ProblemInstance::submp(f, {0, 2});
  CHECK(inst.kind() == ProblemKind::SubMP);
  CHECK(inst.k() == 2);
  // Each part pays the shared cut cost: {0,1} vs {2} cuts edge 1-2 twice.
  CHECK(inst.cost(Partition{{0, 0, 1}, 2}) == doctest::Approx(2.0));
}

TEST_CASE("labeling instance with forbidden pairs") {
  LabelingInstance lab;
  lab.assignment = {make_modular({1.0, 1.0, 1.0}), make_modular({2.0, 2.0, 2.0})};
  lab.coupling = make_graph_cut(3, {{0, 1, 1.0}});
  ProblemInstance inst = ProblemInstance::sublabel(lab, {{0, 1}});
  CHECK(inst.kind() == ProblemKind::SubLabel);
  CHECK(inst.is_forbidden(0, 1));
  CHECK(!inst.is_forbidden(1, 1));
  CHECK(inst.allowed_count(0) == 1);
  CHECK(!inst.partition_feasible(Partition{{1, 0, 0}, 2}));
  CHECK(inst.partition_feasible(Partition{{0, 1, 0}, 2}));
  // label cost = assignment + coupling.
  CHECK(inst.label_cost(0, Subset::singleton(3, 0)) == doctest::Approx(2.0));

  FractionalAllocation u = inst.uniform_allocation();
  CHECK(u(0, 0) == doctest::Approx(1.0));  // only allowed label
  CHECK(u(1, 0) == doctest::Approx(0.5));
  CHECK(inst.allocation_feasible(u));

  // A fully banned row is rejected at construction.
  CHECK_THROWS_AS(ProblemInstance::sublabel(lab, {{0, 0}, {0, 1}}), std::invalid_argument);
}

TEST_CASE("feasibility screening of allocations") {
  ProblemInstance inst = ProblemInstance::graph_mc(3, {{0, 1, 1.0}}, {1, 2});
  FractionalAllocation x = inst.uniform_allocation();
  CHECK_NOTHROW(inst.require_feasible(x));

  FractionalAllocation bad_sum = x;
  bad_sum.set(0, 0, 0.9);
  CHECK_THROWS_AS(inst.require_feasible(bad_sum), InfeasibleError);

  FractionalAllocation bad_pin = x;
  bad_pin.set(1, 0, 0.5);
  bad_pin.set(1, 1, 0.5);
  CHECK_THROWS_AS(inst.require_feasible(bad_pin), InfeasibleError);
  CHECK(!inst.allocation_feasible(bad_pin));
}

TEST_CASE("factory validation") {
  CHECK_THROWS_AS(ProblemInstance::msca({}), std::invalid_argument);
  CHECK_THROWS_AS(ProblemInstance::graph_mc(3, {{0, 1, 1.0}}, {1, 1}), std::invalid_argument);
  CHECK_THROWS_AS(ProblemInstance::graph_mc(3, {{0, 1, 1.0}}, {3}), std::invalid_argument);
  OraclePtr f = make_graph_cut(2, {{0, 1, 1.0}});
  CHECK_THROWS_AS(ProblemInstance::submp(f, {}), std::invalid_argument);
}

TEST_SUITE_END();
