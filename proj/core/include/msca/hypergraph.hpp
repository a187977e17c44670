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

#ifndef MSCA_HYPERGRAPH_HPP
#define MSCA_HYPERGRAPH_HPP

#include <string>
#include <tuple>
#include <vector>

#include "msca/subset.hpp"

namespace msca {

/// Ground set of a problem: n dense element ids, optional display names.
struct GroundSet {
  int n = 0;
  std::vector<std::string> names;  // empty or size n

  std::string name_of(int v) const;
};

/// Hyperedge over vertex ids.  `rep` is the representative vertex used by
/// asymmetric separation costs; it is -1 when no representative is assigned.
struct Hyperedge {
  std::vector<int> verts;  // sorted, distinct
  double weight = 0.0;
  int rep = -1;
};

/// Weighted hypergraph on n vertices with nonnegative edge weights.
struct WeightedHypergraph {
  int n = 0;
  std::vector<Hyperedge> edges;

  /// Throws std::invalid_argument unless vertex ids are in range, edge
  /// vertex lists are sorted and distinct, weights are nonnegative, and
  /// every representative (when present) belongs to its edge.
  void validate(bool require_reps = false) const;

  int max_edge_size() const;

  /// True when every vertex of e is inside s or every vertex is outside.
  bool edge_inside_or_outside(int edge_index, const Subset& s) const;

  /// Number of distinct labels that e meets under the given labeling.
  int edge_label_count(int edge_index, const std::vector<int>& label) const;
};

/// Convenience builder for 2-uniform hypergraphs from an edge list.
WeightedHypergraph graph_as_hypergraph(int n,
                                       const std::vector<std::tuple<int, int, double>>& edges);

}  // namespace msca

#endif  // MSCA_HYPERGRAPH_HPP
