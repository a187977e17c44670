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

#include "msca/exact.hpp"

#include <stdexcept>

#include "doctest.h"
#include "msca/errors.hpp"
#include "msca/instance.hpp"
#include "msca/oracle.hpp"
#include "msca/rng.hpp"

using namespace msca;

TEST_SUITE_BEGIN("exact");

TEST_CASE("modular optimum picks per element minima") {
  auto f0 = make_modular({1.0, 3.0});
  auto f1 = make_modular({2.0, 1.0});
  ProblemInstance inst = ProblemInstance::msca({f0, f1});
  ExactResult r = exact_optimum(inst);
  CHECK(r.cost == doctest::Approx(2.0));
  CHECK(r.partition.label == std::vector<int>{0, 1});
}

TEST_CASE("ties break to the lexicographically smallest labeling") {
  auto z = make_modular({0.0, 0.0, 0.0});
  ProblemInstance inst = ProblemInstance::msca({z, z});
  CHECK(exact_optimum(inst).partition.label == std::vector<int>{0, 0, 0});
}

TEST_CASE("star multiway cut optimum") {
  ProblemInstance inst =
      ProblemInstance::graph_mc(4, {{0, 1, 1.0}, {0, 2, 1.0}, {0, 3, 1.0}}, {1, 2, 3});
  ExactResult r = exact_optimum(inst);
  CHECK(r.cost == doctest::Approx(2.0));
  // Free center takes the first label on ties; terminals keep their pins.
  CHECK(r.partition.label == std::vector<int>{0, 0, 1, 2});
}

TEST_CASE("enumeration guard") {
  std::vector<double> w(30, 1.0);
  ProblemInstance inst = ProblemInstance::msca({make_modular(w), make_modular(w)});
  CHECK_THROWS_AS(exact_optimum(inst), TooLargeError);
}

TEST_CASE("reference extension evaluator clamps and integrates") {
  OraclePtr f = make_graph_cut(2, {{0, 1, 1.0}});
  CHECK(lovasz_eval_reference(*f, {0.8, 0.3}) == doctest::Approx(0.5));
  CHECK(lovasz_eval_reference(*f, {1.4, -0.2}) == doctest::Approx(1.0));
  OraclePtr m = make_modular({2.0, 5.0});
  CHECK(lovasz_eval_reference(*m, {0.5, 0.1}) == doctest::Approx(1.5));
}

TEST_CASE("subset minimization") {
  OraclePtr f = make_graph_cut(3, {{0, 1, 1.0}, {1, 2, 1.0}});
  MinSubsetResult r = brute_min_subset(*f);
  CHECK(r.value == doctest::Approx(0.0));
  CHECK(r.set.empty());  // lowest mask among the minimizers

  r = brute_min_subset(*f, Subset::singleton(3, 0), Subset::singleton(3, 1));
  CHECK(r.value == doctest::Approx(1.0));
  CHECK(r.set.ids() == std::vector<int>{0});

  // Constrained to contain 0: the full set is free of cut edges.
  OraclePtr tri = make_graph_cut(3, {{0, 1, 1.0}, {1, 2, 1.0}, {0, 2, 1.0}});
  r = brute_min_subset(*tri, Subset::singleton(3, 0), Subset::empty_set(3));
  CHECK(r.value == doctest::Approx(0.0));
  CHECK(r.set.is_full());
}

TEST_CASE("monotone oracle minimized by the empty set") {
  OraclePtr f = make_facility(3.0, {1.0, 1.0});
  MinSubsetResult r = brute_min_subset(*f);
  CHECK(r.value == doctest::Approx(0.0));
  CHECK(r.set.empty());
}

TEST_CASE("monte carlo estimator") {
  Estimate e = estimate([](Rng& r) { return r.next_unit(); }, 10000, 3);
  CHECK(e.trials == 10000);
  CHECK(e.mean == doctest::Approx(0.5).epsilon(0.02));
  CHECK(e.std_error > 0.0);
  CHECK(e.std_error < 0.01);

  // Deterministic in the seed.
  Estimate e2 = estimate([](Rng& r) { return r.next_unit(); }, 10000, 3);
  CHECK(e2.mean == e.mean);
  CHECK(e2.std_error == e.std_error);

  // Constant statistic has zero error.
  Estimate c = estimate([](Rng&) { return 2.5; }, 500, 1);
  CHECK(c.mean == doctest::Approx(2.5));
  CHECK(c.std_error == doctest::Approx(0.0));

  CHECK_THROWS_AS(estimate([](Rng&) { return 0.0; }, 50, 0), std::invalid_argument);
}

TEST_SUITE_END();
