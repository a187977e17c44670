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

#include "msca/reductions.hpp"

#include <algorithm>
#include <limits>
#include <queue>
#include <set>
#include <stdexcept>

#include "msca/errors.hpp"
#include "msca/lovasz.hpp"

namespace msca {

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();
}

void NodeWeightedGraph::validate() const {
  if (n < 0) throw std::invalid_argument("node graph: negative vertex count");
  if (static_cast<int>(weight.size()) != n || static_cast<int>(infinite.size()) != n) {
    throw std::invalid_argument("node graph: weight/flag size mismatch");
  }
  for (auto [u, v] : edges) {
    if (u < 0 || u >= n || v < 0 || v >= n || u == v) {
      throw std::invalid_argument("node graph: bad edge");
    }
  }
  std::set<int> seen;
  for (int s : terminals) {
    if (s < 0 || s >= n) throw std::invalid_argument("node graph: terminal out of range");
    if (!seen.insert(s).second) throw std::invalid_argument("node graph: duplicate terminal");
    if (!infinite[s]) throw std::invalid_argument("node graph: terminal not flagged undeletable");
  }
  for (int v = 0; v < n; ++v) {
    if (!infinite[v] && weight[v] < 0) {
      throw std::invalid_argument("node graph: negative vertex weight");
    }
  }
}

std::vector<std::vector<int>> NodeWeightedGraph::adjacency() const {
  std::vector<std::vector<int>> adj(n);
  for (auto [u, v] : edges) {
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  return adj;
}

NodeWeightedGraph hmc_to_nwmc(const WeightedHypergraph& h, const std::vector<int>& terminals) {
  h.validate();
  NodeWeightedGraph g;
  const int m = static_cast<int>(h.edges.size());
  g.n = h.n + m;
  g.weight.assign(g.n, 0.0);
  g.infinite.assign(g.n, 0);
  for (int v = 0; v < h.n; ++v) g.infinite[v] = 1;
  for (int j = 0; j < m; ++j) {
    g.weight[h.n + j] = h.edges[j].weight;
    for (int v : h.edges[j].verts) g.edges.emplace_back(v, h.n + j);
  }
  g.terminals = terminals;
  g.validate();
  return g;
}

HmcReduction nwmc_to_hmc(const NodeWeightedGraph& g) {
  g.validate();
  // Deletable vertices become hyperedges; everything else becomes ground
  // set, with a fresh ground vertex splitting each deletable-deletable edge.
  std::vector<char> deletable(g.n, 0);
  for (int v = 0; v < g.n; ++v) deletable[v] = !g.infinite[v];

  std::vector<int> new_id(g.n, -1);
  HmcReduction out;
  for (int v = 0; v < g.n; ++v) {
    if (!deletable[v]) {
      new_id[v] = static_cast<int>(out.origin.size());
      out.origin.push_back(v);
    }
  }
  std::vector<std::vector<int>> members(g.n);  // per deletable vertex
  for (auto [u, v] : g.edges) {
    if (!deletable[u] && !deletable[v]) {
      throw std::invalid_argument(
          "nwmc_to_hmc: two undeletable vertices are adjacent; subdivide that "
          "edge with a zero-weight vertex first");
    }
    if (deletable[u] && deletable[v]) {
      const int mid = static_cast<int>(out.origin.size());
      out.origin.push_back(-1);
      members[u].push_back(mid);
      members[v].push_back(mid);
    } else {
      const int del = deletable[u] ? u : v;
      const int kept = deletable[u] ? v : u;
      members[del].push_back(new_id[kept]);
    }
  }

  out.hypergraph.n = static_cast<int>(out.origin.size());
  for (int v = 0; v < g.n; ++v) {
    if (!deletable[v] || members[v].empty()) continue;
    Hyperedge e;
    e.verts = members[v];
    std::sort(e.verts.begin(), e.verts.end());
    e.verts.erase(std::unique(e.verts.begin(), e.verts.end()), e.verts.end());
    e.weight = g.weight[v];
    e.rep = e.verts.front();
    out.hypergraph.edges.push_back(std::move(e));
  }
  for (int s : g.terminals) out.terminals.push_back(new_id[s]);
  out.hypergraph.validate(/*require_reps=*/true);
  return out;
}

DistanceAssignment map_x_to_distance(const ProblemInstance& inst, const FractionalAllocation& x) {
  if (inst.kind() != ProblemKind::HypergraphMC || inst.hypergraph() == nullptr) {
    throw std::invalid_argument("map_x_to_distance: needs a hyperedge separation instance");
  }
  inst.require_feasible(x);
  const WeightedHypergraph& h = *inst.hypergraph();
  DistanceAssignment d;
  d.d.assign(h.n + h.edges.size(), 0.0);
  for (std::size_t j = 0; j < h.edges.size(); ++j) {
    d.d[h.n + j] = edge_rep_gap_total(h.edges[j], x);
  }
  return d;
}

namespace {

// Node-weighted shortest path from src to dst: sum of d over interior
// vertices, endpoints free, other terminals impassable.
double interior_path_length(const std::vector<std::vector<int>>& adj,
                            const std::vector<double>& d, const std::vector<char>& terminal,
                            int src, int dst) {
  const int n = static_cast<int>(adj.size());
  std::vector<double> dist(n, kInf);
  using Item = std::pair<double, int>;
  std::priority_queue<Item, std::vector<Item>, std::greater<>> heap;
  dist[src] = 0.0;
  heap.emplace(0.0, src);
  while (!heap.empty()) {
    auto [du, u] = heap.top();
    heap.pop();
    if (du > dist[u]) continue;
    if (u == dst) return du;
    for (int v : adj[u]) {
      if (terminal[v] && v != dst) continue;
      const double cand = du + (v == dst ? 0.0 : d[v]);
      if (cand < dist[v]) {
        dist[v] = cand;
        heap.emplace(cand, v);
      }
    }
  }
  return kInf;
}

}  // namespace

double min_terminal_path(const NodeWeightedGraph& g, const DistanceAssignment& d) {
  g.validate();
  if (static_cast<int>(d.d.size()) != g.n) {
    throw std::invalid_argument("min_terminal_path: length vector size mismatch");
  }
  const auto adj = g.adjacency();
  std::vector<char> terminal(g.n, 0);
  for (int s : g.terminals) terminal[s] = 1;
  double best = kInf;
  for (std::size_t a = 0; a < g.terminals.size(); ++a) {
    for (std::size_t b = a + 1; b < g.terminals.size(); ++b) {
      best = std::min(best,
                      interior_path_length(adj, d.d, terminal, g.terminals[a], g.terminals[b]));
    }
  }
  return best;
}

bool check_distance_feasible(const NodeWeightedGraph& g, const DistanceAssignment& d) {
  return min_terminal_path(g, d) >= 1.0 - 1e-9;
}

namespace {

bool terminals_separated(const std::vector<std::vector<int>>& adj, const std::vector<char>& alive,
                         const std::vector<int>& terminals) {
  const int n = static_cast<int>(adj.size());
  std::vector<int> comp(n, -1);
  for (int s : terminals) {
    if (comp[s] >= 0) return false;  // reached from an earlier terminal
    comp[s] = s;
    std::vector<int> stack{s};
    while (!stack.empty()) {
      const int u = stack.back();
      stack.pop_back();
      for (int v : adj[u]) {
        if (!alive[v] || comp[v] == s) continue;
        if (comp[v] >= 0) return false;
        comp[v] = s;
        stack.push_back(v);
      }
    }
  }
  return true;
}

}  // namespace

double nwmc_optimum_brute(const NodeWeightedGraph& g) {
  g.validate();
  std::vector<int> deletable;
  for (int v = 0; v < g.n; ++v) {
    if (!g.infinite[v]) deletable.push_back(v);
  }
  if (deletable.size() > 22) {
    throw TooLargeError("nwmc_optimum_brute: too many deletable vertices");
  }
  const auto adj = g.adjacency();
  double best = kInf;
  const std::uint64_t limit = std::uint64_t{1} << deletable.size();
  for (std::uint64_t mask = 0; mask < limit; ++mask) {
    double total = 0.0;
    std::vector<char> alive(g.n, 1);
    for (std::size_t j = 0; j < deletable.size(); ++j) {
      if ((mask >> j) & 1u) {
        alive[deletable[j]] = 0;
        total += g.weight[deletable[j]];
      }
    }
    if (total < best && terminals_separated(adj, alive, g.terminals)) best = total;
  }
  return best;
}

}  // namespace msca
