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

#include "msca/hypergraph.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <tuple>

namespace msca {

std::string GroundSet::name_of(int v) const {
  if (!names.empty() && v >= 0 && v < static_cast<int>(names.size())) return names[v];
  return "v" + std::to_string(v);
}

void WeightedHypergraph::validate(bool require_reps) const {
  if (n < 0) throw std::invalid_argument("hypergraph: negative vertex count");
  for (const Hyperedge& e : edges) {
    if (e.verts.empty()) throw std::invalid_argument("hypergraph: empty edge");
    if (!std::is_sorted(e.verts.begin(), e.verts.end())) {
      throw std::invalid_argument("hypergraph: edge vertices not sorted");
    }
    if (std::adjacent_find(e.verts.begin(), e.verts.end()) != e.verts.end()) {
      throw std::invalid_argument("hypergraph: duplicate vertex in edge");
    }
    if (e.verts.front() < 0 || e.verts.back() >= n) {
      throw std::invalid_argument("hypergraph: edge vertex out of range");
    }
    if (e.weight < 0) throw std::invalid_argument("hypergraph: negative edge weight");
    if (e.rep != -1 &&
        !std::binary_search(e.verts.begin(), e.verts.end(), e.rep)) {
      throw std::invalid_argument("hypergraph: representative not in edge");
    }
    if (require_reps && e.rep == -1) {
      throw std::invalid_argument("hypergraph: edge missing representative");
    }
  }
}

int WeightedHypergraph::max_edge_size() const {
  int d = 0;
  for (const Hyperedge& e : edges) d = std::max(d, static_cast<int>(e.verts.size()));
  return d;
}

bool WeightedHypergraph::edge_inside_or_outside(int edge_index, const Subset& s) const {
  const Hyperedge& e = edges.at(edge_index);
  bool any_in = false;
  bool any_out = false;
  for (int v : e.verts) (s.contains(v) ? any_in : any_out) = true;
  return !(any_in && any_out);
}

int WeightedHypergraph::edge_label_count(int edge_index, const std::vector<int>& label) const {
  const Hyperedge& e = edges.at(edge_index);
  std::set<int> seen;
  for (int v : e.verts) seen.insert(label.at(v));
  return static_cast<int>(seen.size());
}

WeightedHypergraph graph_as_hypergraph(
    int n, const std::vector<std::tuple<int, int, double>>& edges) {
  WeightedHypergraph h;
  h.n = n;
  for (const auto& [u, v, w] : edges) {
    Hyperedge e;
    e.verts = {std::min(u, v), std::max(u, v)};
    e.weight = w;
    h.edges.push_back(std::move(e));
  }
  h.validate();
  return h;
}

}  // namespace msca
