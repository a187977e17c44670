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

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace msca {

namespace {

std::uint64_t full_mask(int n) {
  return n >= 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << n) - 1);
}

}  // namespace

Subset::Subset(int ground_size) : n_(ground_size) {
  if (ground_size < 0) throw std::invalid_argument("Subset: negative ground size");
}

Subset Subset::full_set(int ground_size) {
  Subset s(ground_size);
  if (s.uses_mask()) {
    s.bits_ = full_mask(ground_size);
  } else {
    s.ids_.resize(ground_size);
    for (int v = 0; v < ground_size; ++v) s.ids_[v] = v;
  }
  return s;
}

Subset Subset::from_mask(int ground_size, std::uint64_t bits) {
  Subset s(ground_size);
  if (!s.uses_mask()) throw std::invalid_argument("Subset::from_mask: ground set larger than 64");
  if ((bits & ~full_mask(ground_size)) != 0) {
    throw std::out_of_range("Subset::from_mask: bits outside ground set");
  }
  s.bits_ = bits;
  return s;
}

Subset Subset::from_ids(int ground_size, const std::vector<int>& ids) {
  Subset s(ground_size);
  for (int v : ids) s.insert(v);
  return s;
}

Subset Subset::singleton(int ground_size, int v) {
  Subset s(ground_size);
  s.insert(v);
  return s;
}

int Subset::size() const {
  return uses_mask() ? std::popcount(bits_) : static_cast<int>(ids_.size());
}

void Subset::check_element(int v) const {
  if (v < 0 || v >= n_) throw std::out_of_range("Subset: element id out of range");
}

bool Subset::contains(int v) const {
  check_element(v);
  if (uses_mask()) return (bits_ >> v) & 1;
  return std::binary_search(ids_.begin(), ids_.end(), v);
}

void Subset::insert(int v) {
  check_element(v);
  if (uses_mask()) {
    bits_ |= std::uint64_t{1} << v;
  } else {
    auto it = std::lower_bound(ids_.begin(), ids_.end(), v);
    if (it == ids_.end() || *it != v) ids_.insert(it, v);
  }
}

void Subset::erase(int v) {
  check_element(v);
  if (uses_mask()) {
    bits_ &= ~(std::uint64_t{1} << v);
  } else {
    auto it = std::lower_bound(ids_.begin(), ids_.end(), v);
    if (it != ids_.end() && *it == v) ids_.erase(it);
  }
}

namespace {

void check_same_ground(const Subset& a, const Subset& b) {
  if (a.ground_size() != b.ground_size()) {
    throw std::invalid_argument("Subset: mismatched ground sets");
  }
}

}  // namespace

Subset Subset::unite(const Subset& other) const {
  check_same_ground(*this, other);
  if (uses_mask()) return from_mask(n_, bits_ | other.bits_);
  Subset out(n_);
  std::set_union(ids_.begin(), ids_.end(), other.ids_.begin(), other.ids_.end(),
                 std::back_inserter(out.ids_));
  return out;
}

Subset Subset::intersect(const Subset& other) const {
  check_same_ground(*this, other);
  if (uses_mask()) return from_mask(n_, bits_ & other.bits_);
  Subset out(n_);
  std::set_intersection(ids_.begin(), ids_.end(), other.ids_.begin(), other.ids_.end(),
                        std::back_inserter(out.ids_));
  return out;
}

Subset Subset::minus(const Subset& other) const {
  check_same_ground(*this, other);
  if (uses_mask()) return from_mask(n_, bits_ & ~other.bits_);
  Subset out(n_);
  std::set_difference(ids_.begin(), ids_.end(), other.ids_.begin(), other.ids_.end(),
                      std::back_inserter(out.ids_));
  return out;
}

Subset Subset::complement() const { return full_set(n_).minus(*this); }

bool Subset::intersects(const Subset& other) const { return !intersect(other).empty(); }

bool Subset::subset_of(const Subset& other) const { return minus(other).empty(); }

std::uint64_t Subset::mask() const {
  if (!uses_mask()) throw std::logic_error("Subset::mask: ground set larger than 64");
  return bits_;
}

std::vector<int> Subset::ids() const {
  if (!uses_mask()) return ids_;
  std::vector<int> out;
  out.reserve(size());
  for_each([&](int v) { out.push_back(v); });
  return out;
}

bool Subset::operator==(const Subset& other) const {
  if (n_ != other.n_) return false;
  return uses_mask() ? bits_ == other.bits_ : ids_ == other.ids_;
}

}  // namespace msca
