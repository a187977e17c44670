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

#include "msca/lovasz.hpp"

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <stdexcept>

namespace msca {
namespace {

void check_unit_box(const std::vector<double>& x) {
  for (double v : x) {
    if (v < -1e-9 || v > 1.0 + 1e-9) {
      throw std::invalid_argument("lovasz: coordinate outside [0, 1]");
    }
  }
}

// Element ids sorted by coordinate descending, ties by id ascending.
std::vector<int> descending_order(const std::vector<double>& x) {
  std::vector<int> order(x.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&x](int a, int b) { return x[a] > x[b]; });
  return order;
}

}  // namespace

Subset threshold_set(const std::vector<double>& x, double theta) {
  const int n = static_cast<int>(x.size());
  Subset s = Subset::empty_set(n);
  for (int v = 0; v < n; ++v) {
    if (x[v] >= theta) s.insert(v);
  }
  return s;
}

double lovasz_eval(const SubmodularOracle& f, const std::vector<double>& x) {
  const int n = static_cast<int>(x.size());
  if (n != f.n()) throw std::invalid_argument("lovasz_eval: size mismatch");
  check_unit_box(x);
  const std::vector<int> order = descending_order(x);

  Subset prefix = Subset::empty_set(n);
  double total = (1.0 - (n > 0 ? std::clamp(x[order[0]], 0.0, 1.0) : 0.0)) * f(prefix);
  for (int p = 0; p < n; ++p) {
    prefix.insert(order[p]);
    const double hi = std::clamp(x[order[p]], 0.0, 1.0);
    const double lo = (p + 1 < n) ? std::clamp(x[order[p + 1]], 0.0, 1.0) : 0.0;
    total += (hi - lo) * f(prefix);
  }
  return total;
}

std::vector<double> lovasz_subgradient(const SubmodularOracle& f,
                                       const std::vector<double>& x) {
  const int n = static_cast<int>(x.size());
  if (n != f.n()) throw std::invalid_argument("lovasz_subgradient: size mismatch");
  check_unit_box(x);
  const std::vector<int> order = descending_order(x);

  std::vector<double> g(n, 0.0);
  Subset prefix = Subset::empty_set(n);
  double prev = f(prefix);
  for (int p = 0; p < n; ++p) {
    prefix.insert(order[p]);
    const double cur = f(prefix);
    g[order[p]] = cur - prev;
    prev = cur;
  }
  return g;
}

double objective(const ProblemInstance& inst, const FractionalAllocation& x, double tol) {
  inst.require_feasible(x, tol);
  double total = 0.0;
  for (int i = 0; i < inst.k(); ++i) {
    total += lovasz_eval(*inst.label_oracle(i), x.column(i));
  }
  return total;
}

std::pair<double, double> edge_interval(const Hyperedge& e, const FractionalAllocation& x,
                                        int label) {
  double lo = 1.0, hi = 0.0;
  for (int v : e.verts) {
    const double t = x(v, label);
    lo = std::min(lo, t);
    hi = std::max(hi, t);
  }
  return {lo, hi};
}

double edge_spread(const Hyperedge& e, const FractionalAllocation& x, int label) {
  auto [lo, hi] = edge_interval(e, x, label);
  return hi - lo;
}

double edge_spread_total(const Hyperedge& e, const FractionalAllocation& x) {
  double total = 0.0;
  for (int i = 0; i < x.k(); ++i) total += edge_spread(e, x, i);
  return total;
}

double edge_rep_gap(const Hyperedge& e, const FractionalAllocation& x, int label) {
  if (e.rep < 0) throw std::invalid_argument("edge_rep_gap: edge has no representative");
  auto [lo, hi] = edge_interval(e, x, label);
  (void)hi;
  return x(e.rep, label) - lo;
}

double edge_rep_gap_total(const Hyperedge& e, const FractionalAllocation& x) {
  double total = 0.0;
  for (int i = 0; i < x.k(); ++i) total += edge_rep_gap(e, x, i);
  return total;
}

}  // namespace msca
