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

#ifndef MSCA_GENERATORS_HPP
#define MSCA_GENERATORS_HPP

#include <cstdint>

#include "msca/allocation.hpp"
#include "msca/instance.hpp"
#include "msca/rng.hpp"

namespace msca {

/// Random instances, deterministic in the seed.  Weights are drawn as
/// small integers so exact optima stay human-checkable.

/// Graph multiway cut: each of the n*(n-1)/2 pairs becomes an edge with
/// probability `density`, integer weight in [weight_lo, weight_hi].
ProblemInstance random_graph_mc(int n, int k, double density, int weight_lo, int weight_hi,
                                std::uint64_t seed);

/// Hypergraph cut instance with m edges of size 2..max_edge_size.  `kind`
/// selects the shared-cut form (HypergraphMP) or the representative-
/// separation form (HypergraphMC, random representative per edge).
ProblemInstance random_hypergraph(int n, int k, int m, int max_edge_size, ProblemKind kind,
                                  std::uint64_t seed);

/// Labeling instance: modular per-label assignment costs, a hypergraph
/// coupling (separation with representatives when separation_coupling,
/// otherwise symmetric cut), and a sparse random forbidden mask.
ProblemInstance random_sublabel(int n, int k, int m, int max_edge_size, bool separation_coupling,
                                std::uint64_t seed);

/// k monotone cost oracles drawn from the modular / facility / coverage
/// families.
ProblemInstance random_monotone_msca(int n, int k, std::uint64_t seed);

/// k modular cost oracles with nonnegative integer weights.
ProblemInstance random_modular_msca(int n, int k, std::uint64_t seed);

/// Uniformly-spirited feasible point: pinned rows are unit vectors, free
/// rows are normalized exponentials over the allowed labels.
FractionalAllocation random_feasible_allocation(const ProblemInstance& inst, Rng& rng);

/// Worst-case family for threshold rounding: the complete size-delta
/// hypergraph on k vertices, vertex i barred from label i, zero assignment
/// costs, unit separation coupling.  `candidate` spreads each vertex evenly
/// over its k-1 allowed labels.  The claimed_* fields record the published
/// closed forms for this family; tests compare against them.
struct GapExample {
  ProblemInstance instance;
  FractionalAllocation candidate;
  double claimed_integral_optimum = 0.0;  // C(k-1, delta-1)
  double claimed_candidate_cost = 0.0;    // C(k, delta) / (k-1)
  double claimed_ratio = 0.0;             // delta * (1 - 1/k)
};
GapExample gen_gap_example(int k, int delta);

/// Single-edge separation instance whose allocation makes the random-
/// permutation threshold rounding cut the edge with probability
/// epsilon * (H_m - 1/k): a staircase of m rows over the first m labels,
/// representative gap exactly epsilon.  The k terminals sit outside the
/// edge and only anchor the labels.
struct CkrTightEdge {
  ProblemInstance instance;  // n = k + m vertices, one edge over the last m
  FractionalAllocation x;
  double edge_distance = 0.0;  // equals epsilon
};
CkrTightEdge gen_ckr_tight_edge(int m, int k, double epsilon);

}  // namespace msca

#endif  // MSCA_GENERATORS_HPP
