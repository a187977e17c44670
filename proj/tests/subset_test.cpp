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

#include "msca/subset.hpp"

#include <vector>

#include "doctest.h"

using msca::Subset;

TEST_SUITE_BEGIN("subset");

TEST_CASE("construction and membership") {
  Subset s = Subset::from_ids(6, {0, 2, 5});
  CHECK(s.ground_size() == 6);
  CHECK(s.size() == 3);
  CHECK(s.contains(0));
  CHECK(!s.contains(1));
  CHECK(s.contains(5));
  CHECK(!s.empty());
  CHECK(!s.is_full());

  CHECK(Subset::empty_set(4).empty());
  CHECK(Subset::full_set(4).is_full());
  CHECK(Subset::full_set(4).size() == 4);
  CHECK(Subset::singleton(4, 2).ids() == std::vector<int>{2});
}

TEST_CASE("mask round trip") {
  Subset s = Subset::from_mask(8, 0b10100101);
  CHECK(s.mask() == 0b10100101);
  CHECK(s.ids() == std::vector<int>{0, 2, 5, 7});
  CHECK(Subset::from_ids(8, s.ids()) == s);
}

TEST_CASE("insert and erase") {
  Subset s = Subset::empty_set(5);
  s.insert(3);
  s.insert(1);
  s.insert(3);
  CHECK(s.ids() == std::vector<int>{1, 3});
  s.erase(1);
  s.erase(0);
  CHECK(s.ids() == std::vector<int>{3});
}

TEST_CASE("set algebra") {
  Subset a = Subset::from_ids(6, {0, 1, 3});
  Subset b = Subset::from_ids(6, {1, 2, 3, 5});
  CHECK(a.unite(b).ids() == std::vector<int>{0, 1, 2, 3, 5});
  CHECK(a.intersect(b).ids() == std::vector<int>{1, 3});
  CHECK(a.minus(b).ids() == std::vector<int>{0});
  CHECK(a.complement().ids() == std::vector<int>{2, 4, 5});
  CHECK(a.intersects(b));
  CHECK(!a.subset_of(b));
  CHECK(a.intersect(b).subset_of(a));
  CHECK(!a.intersects(Subset::from_ids(6, {2, 4})));
}

TEST_CASE("for_each visits ascending") {
  Subset s = Subset::from_ids(7, {6, 0, 4});
  std::vector<int> seen;
  s.for_each([&](int v) { seen.push_back(v); });
  CHECK(seen == std::vector<int>{0, 4, 6});
}

TEST_CASE("wide ground sets") {
  // Beyond 64 elements the id-vector representation takes over.
  Subset a = Subset::from_ids(100, {0, 64, 99});
  Subset b = Subset::from_ids(100, {64, 70});
  CHECK(a.size() == 3);
  CHECK(a.contains(99));
  CHECK(a.unite(b).ids() == std::vector<int>{0, 64, 70, 99});
  CHECK(a.intersect(b).ids() == std::vector<int>{64});
  CHECK(a.minus(b).ids() == std::vector<int>{0, 99});
  CHECK(a.complement().size() == 97);
  CHECK(b.subset_of(a.unite(b)));
  a.insert(50);
  a.erase(0);
  CHECK(a.ids() == std::vector<int>{50, 64, 99});
}

TEST_SUITE_END();
