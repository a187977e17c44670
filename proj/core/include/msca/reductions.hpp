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

#ifndef MSCA_REDUCTIONS_HPP
#define MSCA_REDUCTIONS_HPP

#include <utility>
#include <vector>

#include "msca/allocation.hpp"
#include "msca/hypergraph.hpp"
#include "msca/instance.hpp"

namespace msca {

/// Multiway cut instance with weights on vertices: disconnect the terminals
/// pairwise by deleting non-terminal vertices of minimum total weight.
/// Vertices flagged infinite (terminals always are) may never be deleted.
struct NodeWeightedGraph {
  int n = 0;
  std::vector<double> weight;              // per vertex, >= 0; ignored when infinite
  std::vector<char> infinite;              // deletion forbidden
  std::vector<std::pair<int, int>> edges;  // undirected, simple
  std::vector<int> terminals;

  void validate() const;
  std::vector<std::vector<int>> adjacency() const;
};

/// Per-vertex lengths for the path-covering relaxation of node-weighted
/// multiway cut: every path between two terminals must accumulate total
/// length >= 1 over its interior vertices.
struct DistanceAssignment {
  std::vector<double> d;  // size n of the graph it refers to; 0 on terminals
};

/// Hyperedge separation instance as a node-weighted cut instance.  Vertices
/// 0..h.n-1 are the original vertices (kept, infinite weight); vertex h.n+j
/// stands for edge j with weight w(e_j) and is joined to the edge's vertices.
/// Deleting an edge-vertex corresponds to cutting that hyperedge.
NodeWeightedGraph hmc_to_nwmc(const WeightedHypergraph& h, const std::vector<int>& terminals);

struct HmcReduction {
  WeightedHypergraph hypergraph;
  std::vector<int> terminals;
  /// Hypergraph vertex id -> original graph vertex, or -1 for vertices
  /// introduced by edge subdivision.
  std::vector<int> origin;
};

/// Node-weighted multiway cut as a hyperedge separation instance.  Edges
/// between two deletable vertices are subdivided; each deletable vertex
/// becomes a hyperedge over its neighbors with its weight.  Requires that
/// no two undeletable vertices (terminals included) are adjacent; subdivide
/// such edges first.
HmcReduction nwmc_to_hmc(const NodeWeightedGraph& g);

/// Lengths for hmc_to_nwmc(h, terminals) induced by a feasible fractional
/// allocation: an edge-vertex gets the edge's representative gap, original
/// vertices get zero.
DistanceAssignment map_x_to_distance(const ProblemInstance& inst, const FractionalAllocation& x);

/// Smallest interior length over all terminal-to-terminal paths; +infinity
/// when every terminal pair is already disconnected.
double min_terminal_path(const NodeWeightedGraph& g, const DistanceAssignment& d);

/// True iff min_terminal_path(g, d) >= 1 - 1e-9.
bool check_distance_feasible(const NodeWeightedGraph& g, const DistanceAssignment& d);

/// Exhaustive node-weighted multiway cut optimum (deletable vertices <= 22,
/// TooLargeError beyond).  Returns +infinity when no deletion set works.
double nwmc_optimum_brute(const NodeWeightedGraph& g);

}  // namespace msca

#endif  // MSCA_REDUCTIONS_HPP
