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

#ifndef MSCA_EXACT_HPP
#define MSCA_EXACT_HPP

#include <cstdint>
#include <functional>
#include <vector>

#include "msca/allocation.hpp"
#include "msca/instance.hpp"
#include "msca/oracle.hpp"
#include "msca/rng.hpp"
#include "msca/subset.hpp"

namespace msca {

struct ExactResult {
  Partition partition;
  double cost = 0.0;
};

/// Global minimum over all feasible total partitions by enumeration.
/// Requires k^(free elements) <= 2e7; throws TooLargeError otherwise.
/// Ties break toward the lexicographically smallest label vector.
ExactResult exact_optimum(const ProblemInstance& inst);

/// Extension value by direct integration over the level-set breakpoints
/// of x.  Deliberately shares no code with lovasz_eval so the two can
/// cross-check each other.  Entries are clamped to [0,1].
double lovasz_eval_reference(const SubmodularOracle& f, const std::vector<double>& x);

struct MinSubsetResult {
  Subset set;
  double value = 0.0;
};

/// Exhaustive submodular minimization for n <= 22 (throws TooLargeError
/// beyond that).  Optional side constraints force must_contain into the
/// minimizer and keep must_avoid out.  Ties break toward the set whose
/// bit mask is numerically smallest.
MinSubsetResult brute_min_subset(const SubmodularOracle& f);
MinSubsetResult brute_min_subset(const SubmodularOracle& f, const Subset& must_contain,
                                 const Subset& must_avoid);

struct Estimate {
  double mean = 0.0;
  double std_error = 0.0;
  int trials = 0;
};

/// Monte-Carlo mean and standard error of a statistic.  Trial t runs the
/// statistic with a fresh Rng(seed + t), so results are reproducible and
/// trials can be sharded by seed offset.  Requires trials >= 100.
Estimate estimate(const std::function<double(Rng&)>& statistic, int trials, std::uint64_t seed);

}  // namespace msca

#endif  // MSCA_EXACT_HPP
