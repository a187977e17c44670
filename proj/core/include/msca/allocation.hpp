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

#ifndef MSCA_ALLOCATION_HPP
#define MSCA_ALLOCATION_HPP

#include <optional>
#include <vector>

#include "msca/subset.hpp"

namespace msca {

/// Integral assignment of every element to one of k labels (0-based).
struct Partition {
  std::vector<int> label;  // size n, entries in 0..k-1
  int k = 0;

  int n() const { return static_cast<int>(label.size()); }
  Subset members(int i) const;
  void validate() const;
};

/// Row-stochastic n x k matrix: x(v, i) is the fraction of element v
/// assigned to label i.  Rows sum to one for feasible allocations.
class FractionalAllocation {
 public:
  FractionalAllocation() = default;
  FractionalAllocation(int n, int k);

  /// Uniform rows 1/k.
  static FractionalAllocation uniform(int n, int k);
  /// Indicator encoding of an integral assignment.
  static FractionalAllocation from_partition(const Partition& p);

  int n() const { return n_; }
  int k() const { return k_; }

  double operator()(int v, int i) const { return x_[index(v, i)]; }
  void set(int v, int i, double value) { x_[index(v, i)] = value; }

  /// Column i as a length-n vector (the per-label membership vector).
  std::vector<double> column(int i) const;
  void set_row(int v, const std::vector<double>& row);
  std::vector<double> row(int v) const;

  const std::vector<double>& data() const { return x_; }
  std::vector<double>& data() { return x_; }

  /// Max row-sum deviation from 1 and worst out-of-range entry.
  double max_row_sum_error() const;
  double min_entry() const;

  bool rows_stochastic(double tol = 1e-9) const;

  /// True when every entry is 0 or 1 (within tol) and rows are stochastic.
  bool integral(double tol = 1e-9) const;
  /// Rounds an integral allocation to the encoded partition.
  Partition to_partition(double tol = 1e-9) const;

 private:
  std::size_t index(int v, int i) const;

  int n_ = 0;
  int k_ = 0;
  std::vector<double> x_;  // row-major n x k
};

}  // namespace msca

#endif  // MSCA_ALLOCATION_HPP
