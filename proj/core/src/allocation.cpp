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

#include "msca/allocation.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace msca {

Subset Partition::members(int i) const {
  Subset s(n());
  for (int v = 0; v < n(); ++v) {
    if (label[v] == i) s.insert(v);
  }
  return s;
}

void Partition::validate() const {
  if (k <= 0) throw std::invalid_argument("partition: k must be positive");
  for (int l : label) {
    if (l < 0 || l >= k) throw std::invalid_argument("partition: label out of range");
  }
}

FractionalAllocation::FractionalAllocation(int n, int k) : n_(n), k_(k) {
  if (n < 0 || k <= 0) throw std::invalid_argument("allocation: bad dimensions");
  x_.assign(static_cast<std::size_t>(n) * k, 0.0);
}

FractionalAllocation FractionalAllocation::uniform(int n, int k) {
  FractionalAllocation a(n, k);
  double u = 1.0 / k;
  std::fill(a.x_.begin(), a.x_.end(), u);
  return a;
}

FractionalAllocation FractionalAllocation::from_partition(const Partition& p) {
  p.validate();
  FractionalAllocation a(p.n(), p.k);
  for (int v = 0; v < p.n(); ++v) a.set(v, p.label[v], 1.0);
  return a;
}

std::size_t FractionalAllocation::index(int v, int i) const {
  if (v < 0 || v >= n_ || i < 0 || i >= k_) {
    throw std::out_of_range("allocation: index out of range");
  }
  return static_cast<std::size_t>(v) * k_ + i;
}

std::vector<double> FractionalAllocation::column(int i) const {
  std::vector<double> col(n_);
  for (int v = 0; v < n_; ++v) col[v] = x_[index(v, i)];
  return col;
}

void FractionalAllocation::set_row(int v, const std::vector<double>& row) {
  if (static_cast<int>(row.size()) != k_) {
    throw std::invalid_argument("allocation: row has wrong length");
  }
  for (int i = 0; i < k_; ++i) x_[index(v, i)] = row[i];
}

std::vector<double> FractionalAllocation::row(int v) const {
  std::vector<double> out(k_);
  for (int i = 0; i < k_; ++i) out[i] = x_[index(v, i)];
  return out;
}

double FractionalAllocation::max_row_sum_error() const {
  double worst = 0;
  for (int v = 0; v < n_; ++v) {
    double sum = 0;
    for (int i = 0; i < k_; ++i) sum += x_[index(v, i)];
    worst = std::max(worst, std::abs(sum - 1.0));
  }
  return worst;
}

double FractionalAllocation::min_entry() const {
  double m = 0;
  for (double v : x_) m = std::min(m, v);
  return m;
}

bool FractionalAllocation::rows_stochastic(double tol) const {
  return max_row_sum_error() <= tol && min_entry() >= -tol;
}

bool FractionalAllocation::integral(double tol) const {
  if (!rows_stochastic(tol)) return false;
  for (double v : x_) {
    if (std::abs(v) > tol && std::abs(v - 1.0) > tol) return false;
  }
  return true;
}

Partition FractionalAllocation::to_partition(double tol) const {
  if (!integral(tol)) throw std::invalid_argument("allocation: not integral");
  Partition p;
  p.k = k_;
  p.label.resize(n_);
  for (int v = 0; v < n_; ++v) {
    for (int i = 0; i < k_; ++i) {
      if (x_[index(v, i)] > 0.5) {
        p.label[v] = i;
        break;
      }
    }
  }
  return p;
}

}  // namespace msca
