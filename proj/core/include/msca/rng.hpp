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

#ifndef MSCA_RNG_HPP
#define MSCA_RNG_HPP

#include <cstdint>
#include <numeric>
#include <vector>

namespace msca {

/// Deterministic counter-based generator (splitmix64 over seed + counter).
///
/// The draw sequence depends only on the seed, never on platform or standard
/// library internals, so recorded seeds reproduce runs bit for bit.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : seed_(seed) {}

  std::uint64_t seed() const { return seed_; }

  std::uint64_t next_u64() {
    std::uint64_t z = seed_ + 0x9E3779B97F4A7C15ULL * ++counter_;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  /// 53-bit uniform draw in [0, 1).
  double next_unit() {
    return static_cast<double>(next_u64() >> 11) * 0x1p-53;
  }

  /// 53-bit uniform draw in (0, 1].
  double next_unit_open_low() { return 1.0 - next_unit(); }

  /// Uniform integer in [0, m); m must be positive.
  int next_below(int m) {
    return static_cast<int>(next_u64() % static_cast<std::uint64_t>(m));
  }

  /// Uniform integer in [lo, hi] inclusive.
  int next_int(int lo, int hi) { return lo + next_below(hi - lo + 1); }

  bool next_bool(double p) { return next_unit() < p; }

  /// Fisher-Yates shuffle of 0..m-1.
  std::vector<int> permutation(int m) {
    std::vector<int> p(m);
    std::iota(p.begin(), p.end(), 0);
    for (int i = m - 1; i > 0; --i) {
      int j = next_below(i + 1);
      std::swap(p[i], p[j]);
    }
    return p;
  }

 private:
  std::uint64_t seed_;
  std::uint64_t counter_ = 0;
};

}  // namespace msca

#endif  // MSCA_RNG_HPP
