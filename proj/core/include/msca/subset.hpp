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

#ifndef MSCA_SUBSET_HPP
#define MSCA_SUBSET_HPP

#include <cstdint>
#include <vector>

namespace msca {

/// Subset of a dense ground set {0, ..., n-1}.
///
/// Stored as a 64-bit mask while n <= 64 and as a sorted id vector for
/// larger ground sets.  All operations keep the representation normalized,
/// so equality is structural.
class Subset {
 public:
  Subset() = default;
  explicit Subset(int ground_size);

  static Subset empty_set(int ground_size) { return Subset(ground_size); }
  static Subset full_set(int ground_size);
  static Subset from_mask(int ground_size, std::uint64_t bits);
  static Subset from_ids(int ground_size, const std::vector<int>& ids);
  static Subset singleton(int ground_size, int v);

  int ground_size() const { return n_; }
  int size() const;
  bool empty() const { return size() == 0; }
  bool is_full() const { return size() == n_; }

  bool contains(int v) const;
  void insert(int v);
  void erase(int v);

  Subset unite(const Subset& other) const;
  Subset intersect(const Subset& other) const;
  Subset minus(const Subset& other) const;
  Subset complement() const;

  bool intersects(const Subset& other) const;
  bool subset_of(const Subset& other) const;

  /// Mask form; only valid while ground_size() <= 64.
  std::uint64_t mask() const;
  /// Sorted member ids, valid for any ground size.
  std::vector<int> ids() const;

  template <class Fn>
  void for_each(Fn&& fn) const {
    if (uses_mask()) {
      std::uint64_t b = bits_;
      while (b != 0) {
        int v = __builtin_ctzll(b);
        fn(v);
        b &= b - 1;
      }
    } else {
      for (int v : ids_) fn(v);
    }
  }

  bool operator==(const Subset& other) const;
  bool operator!=(const Subset& other) const { return !(*this == other); }

 private:
  bool uses_mask() const { return n_ <= 64; }
  void check_element(int v) const;

  int n_ = 0;
  std::uint64_t bits_ = 0;     // valid when n_ <= 64
  std::vector<int> ids_;       // sorted, valid when n_ > 64
};

}  // namespace msca

#endif  // MSCA_SUBSET_HPP
