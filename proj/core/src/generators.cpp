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

#include "msca/generators.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "msca/lovasz.hpp"

namespace msca {
namespace {

std::vector<int> pick_terminals(int n, int k, Rng& rng) {
  if (k < 1 || k > n) throw std::invalid_argument("generator: need 1 <= k <= n");
  std::vector<int> perm = rng.permutation(n);
  perm.resize(k);
  return perm;
}

Hyperedge random_edge(int n, int max_edge_size, bool with_rep, Rng& rng) {
  const int cap = std::min(max_edge_size, n);
  if (cap < 2) throw std::invalid_argument("generator: edges need at least 2 vertices");
  const int size = rng.next_int(2, cap);
  std::vector<int> perm = rng.permutation(n);
  Hyperedge e;
  e.verts.assign(perm.begin(), perm.begin() + size);
  std::sort(e.verts.begin(), e.verts.end());
  e.weight = rng.next_int(1, 10);
  if (with_rep) e.rep = e.verts[rng.next_below(size)];
  return e;
}

double binomial(int n, int k) {
  if (k < 0 || k > n) return 0.0;
  double r = 1.0;
  for (int j = 1; j <= k; ++j) r = r * (n - k + j) / j;
  return std::round(r);
}

}  // namespace

ProblemInstance random_graph_mc(int n, int k, double density, int weight_lo, int weight_hi,
                                std::uint64_t seed) {
  if (weight_lo < 0 || weight_hi < weight_lo) {
    throw std::invalid_argument("random_graph_mc: bad weight range");
  }
  Rng rng(seed);
  std::vector<int> terminals = pick_terminals(n, k, rng);
  std::vector<std::tuple<int, int, double>> edges;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (rng.next_bool(density)) {
        edges.emplace_back(u, v, static_cast<double>(rng.next_int(weight_lo, weight_hi)));
      }
    }
  }
  return ProblemInstance::graph_mc(n, edges, std::move(terminals));
}

ProblemInstance random_hypergraph(int n, int k, int m, int max_edge_size, ProblemKind kind,
                                  std::uint64_t seed) {
  if (kind != ProblemKind::HypergraphMP && kind != ProblemKind::HypergraphMC) {
    throw std::invalid_argument("random_hypergraph: kind must be a hypergraph family");
  }
  Rng rng(seed);
  std::vector<int> terminals = pick_terminals(n, k, rng);
  WeightedHypergraph h;
  h.n = n;
  const bool with_rep = kind == ProblemKind::HypergraphMC;
  for (int j = 0; j < m; ++j) h.edges.push_back(random_edge(n, max_edge_size, with_rep, rng));
  if (with_rep) return ProblemInstance::hypergraph_mc(std::move(h), std::move(terminals));
  return ProblemInstance::hypergraph_mp(std::move(h), std::move(terminals));
}

ProblemInstance random_sublabel(int n, int k, int m, int max_edge_size, bool separation_coupling,
                                std::uint64_t seed) {
  Rng rng(seed);
  WeightedHypergraph h;
  h.n = n;
  for (int j = 0; j < m; ++j) h.edges.push_back(random_edge(n, max_edge_size, separation_coupling, rng));

  LabelingInstance lab;
  for (int i = 0; i < k; ++i) {
    std::vector<double> w(n);
    for (double& v : w) v = rng.next_int(0, 8);
    lab.assignment.push_back(make_modular(w));
  }
  lab.coupling = separation_coupling ? make_hypergraph_separation(h) : make_hypergraph_cut(h);

  std::vector<std::pair<int, int>> forbidden;
  for (int v = 0; v < n; ++v) {
    int banned = 0;
    for (int i = 0; i < k; ++i) {
      if (banned < k - 1 && rng.next_bool(0.15)) {
        forbidden.emplace_back(v, i);
        ++banned;
      }
    }
  }
  return ProblemInstance::sublabel(std::move(lab), std::move(forbidden), std::move(h));
}

ProblemInstance random_monotone_msca(int n, int k, std::uint64_t seed) {
  Rng rng(seed);
  std::vector<OraclePtr> costs;
  for (int i = 0; i < k; ++i) {
    switch (rng.next_below(3)) {
      case 0: {
        std::vector<double> w(n);
        for (double& v : w) v = rng.next_int(0, 9);
        costs.push_back(make_modular(w));
        break;
      }
      case 1: {
        std::vector<double> connect(n);
        for (double& v : connect) v = rng.next_int(0, 5);
        costs.push_back(make_facility(rng.next_int(1, 6), connect));
        break;
      }
      default: {
        const int items = rng.next_int(2, 2 * n);
        std::vector<double> item_w(items);
        for (double& v : item_w) v = rng.next_int(1, 4);
        std::vector<std::vector<int>> covers(n);
        for (int v = 0; v < n; ++v) {
          for (int t = 0; t < items; ++t) {
            if (rng.next_bool(0.4)) covers[v].push_back(t);
          }
        }
        costs.push_back(make_coverage(covers, item_w));
        break;
      }
    }
  }
  return ProblemInstance::msca(std::move(costs));
}

ProblemInstance random_modular_msca(int n, int k, std::uint64_t seed) {
  Rng rng(seed);
  std::vector<OraclePtr> costs;
  for (int i = 0; i < k; ++i) {
    std::vector<double> w(n);
    for (double& v : w) v = rng.next_int(0, 9);
    costs.push_back(make_modular(w));
  }
  return ProblemInstance::msca(std::move(costs));
}

FractionalAllocation random_feasible_allocation(const ProblemInstance& inst, Rng& rng) {
  FractionalAllocation x(inst.n(), inst.k());
  for (int v = 0; v < inst.n(); ++v) {
    const int pin = inst.pinned_label(v);
    if (pin >= 0) {
      x.set(v, pin, 1.0);
      continue;
    }
    double total = 0.0;
    std::vector<double> row(inst.k(), 0.0);
    for (int i = 0; i < inst.k(); ++i) {
      if (inst.is_forbidden(v, i)) continue;
      row[i] = -std::log(1.0 - rng.next_unit());
      total += row[i];
    }
    for (int i = 0; i < inst.k(); ++i) x.set(v, i, row[i] / total);
  }
  return x;
}

GapExample gen_gap_example(int k, int delta) {
  if (delta < 1 || delta > k) throw std::invalid_argument("gen_gap_example: need 1 <= delta <= k");
  WeightedHypergraph h;
  h.n = k;
  // All size-delta subsets of the k vertices, unit weight, lowest vertex
  // as representative.
  std::vector<int> pick(delta);
  for (int j = 0; j < delta; ++j) pick[j] = j;
  for (;;) {
    Hyperedge e;
    e.verts = pick;
    e.weight = 1.0;
    e.rep = pick[0];
    h.edges.push_back(std::move(e));
    int j = delta - 1;
    while (j >= 0 && pick[j] == k - delta + j) --j;
    if (j < 0) break;
    ++pick[j];
    for (int t = j + 1; t < delta; ++t) pick[t] = pick[t - 1] + 1;
  }

  LabelingInstance lab;
  for (int i = 0; i < k; ++i) lab.assignment.push_back(make_modular(std::vector<double>(k, 0.0)));
  lab.coupling = make_hypergraph_separation(h);
  std::vector<std::pair<int, int>> forbidden;
  for (int v = 0; v < k; ++v) forbidden.emplace_back(v, v);

  FractionalAllocation candidate(k, k);
  for (int v = 0; v < k; ++v) {
    for (int i = 0; i < k; ++i) {
      if (i != v) candidate.set(v, i, 1.0 / (k - 1));
    }
  }
  return GapExample{ProblemInstance::sublabel(std::move(lab), std::move(forbidden), std::move(h)),
                    std::move(candidate), binomial(k - 1, delta - 1),
                    binomial(k, delta) / (k - 1), delta * (1.0 - 1.0 / k)};
}

CkrTightEdge gen_ckr_tight_edge(int m, int k, double epsilon) {
  if (m < 2 || k < m) throw std::invalid_argument("gen_ckr_tight_edge: need 2 <= m <= k");
  // Top row of the staircase must stay a valid distribution even after the
  // epsilon shift down in the first column.
  const double first = 1.0 - epsilon * (m - 2) * (m - 1) / 2.0;
  if (epsilon <= 0.0 || epsilon * m > 1.0 || first - epsilon < 0.0) {
    throw std::invalid_argument("gen_ckr_tight_edge: epsilon out of range");
  }

  const int n = k + m;
  WeightedHypergraph h;
  h.n = n;
  Hyperedge e;
  for (int j = 0; j < m; ++j) e.verts.push_back(k + j);
  e.weight = 1.0;
  e.rep = k;
  h.edges.push_back(e);

  std::vector<int> terminals(k);
  for (int i = 0; i < k; ++i) terminals[i] = i;

  FractionalAllocation x(n, k);
  for (int i = 0; i < k; ++i) x.set(i, i, 1.0);
  // Row for the representative u = vertex k: `first` on label 0, then a
  // descending staircase (m-1-i)*eps on labels 1..m-1.  Row for vertex k+j
  // copies u's row with eps moved from label 0 to label j.
  for (int j = 0; j < m; ++j) {
    const int v = k + j;
    x.set(v, 0, j == 0 ? first : first - epsilon);
    for (int i = 1; i < m; ++i) {
      x.set(v, i, (m - 1 - i) * epsilon + (i == j ? epsilon : 0.0));
    }
  }
  const double dist = edge_rep_gap_total(e, x);
  return CkrTightEdge{ProblemInstance::hypergraph_mc(std::move(h), std::move(terminals)),
                      std::move(x), dist};
}

}  // namespace msca
