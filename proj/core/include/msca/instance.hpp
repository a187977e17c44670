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

#ifndef MSCA_INSTANCE_HPP
#define MSCA_INSTANCE_HPP

#include <optional>
#include <string>
#include <vector>

#include "msca/allocation.hpp"
#include "msca/hypergraph.hpp"
#include "msca/oracle.hpp"

namespace msca {

/// Problem families handled by the toolkit.
///
///  Msca         minimize sum_i f_i(A_i) over partitions (A_1..A_k)
///  SubMP        one cost f applied to every part; terminal s_i is pinned
///               to part i (multiway-partition form)
///  HypergraphMP SubMP with f = scaled hypergraph cut capacity (symmetric);
///               2-uniform edges with scale 1/2 model graph multiway cut
///  HypergraphMC SubMP with f = hyperedge separation cost (each cut edge is
///               charged once, at the part holding its representative)
///  SubLabel     minimize sum_i g_i(A_i) + h(A_i) with monotone assignment
///               costs g_i, shared coupling cost h, and an optional mask of
///               forbidden (element, label) pairs
enum class ProblemKind { Msca, SubMP, HypergraphMP, HypergraphMC, SubLabel };

const char* to_string(ProblemKind kind);

/// Assignment costs plus coupling cost for labeling problems.
struct LabelingInstance {
  std::vector<OraclePtr> assignment;  // g_1..g_k, monotone
  OraclePtr coupling;                 // h
};

/// One problem instance: the kind tag plus whichever fields that kind uses.
/// Construct through the static factories; they validate shapes and build
/// the per-label cost oracles.
class ProblemInstance {
 public:
  static ProblemInstance msca(std::vector<OraclePtr> costs);
  static ProblemInstance submp(OraclePtr cost, std::vector<int> terminals);
  static ProblemInstance hypergraph_mp(WeightedHypergraph h, std::vector<int> terminals,
                                       double cut_scale = 1.0);
  static ProblemInstance graph_mc(int n, const std::vector<std::tuple<int, int, double>>& edges,
                                  std::vector<int> terminals);
  static ProblemInstance hypergraph_mc(WeightedHypergraph h, std::vector<int> terminals);
  static ProblemInstance sublabel(LabelingInstance labeling,
                                  std::vector<std::pair<int, int>> forbidden = {},
                                  std::optional<WeightedHypergraph> coupling_edges = std::nullopt);

  ProblemKind kind() const { return kind_; }
  int n() const { return n_; }
  int k() const { return k_; }

  bool has_terminals() const { return !terminals_.empty(); }
  const std::vector<int>& terminals() const { return terminals_; }
  /// Label pinned to element v, or -1 when v is free.
  int pinned_label(int v) const;
  int free_count() const;

  bool is_forbidden(int v, int i) const;
  bool has_forbidden() const { return !forbidden_.empty(); }
  int allowed_count(int v) const;

  /// Cost oracle for part i: f_i for Msca, the shared f for the SubMP
  /// family, g_i + h for SubLabel.
  const OraclePtr& label_oracle(int i) const;
  double label_cost(int i, const Subset& s) const;

  /// Integral objective: sum of label costs over the parts.
  double cost(const Partition& p) const;

  /// Hypergraph backing the coupling cost, when one exists.
  const WeightedHypergraph* hypergraph() const;
  double cut_scale() const { return cut_scale_; }

  /// SubLabel accessors.
  const LabelingInstance& labeling() const;

  /// True when p has the right shape, honors pins, and avoids forbidden pairs.
  bool partition_feasible(const Partition& p) const;

  /// Throws InfeasibleError unless x is row stochastic within tol, pins
  /// terminals, and puts zero mass on forbidden pairs.
  void require_feasible(const FractionalAllocation& x, double tol = 1e-6) const;
  bool allocation_feasible(const FractionalAllocation& x, double tol = 1e-6) const;

  /// Feasible starting point: pinned rows are unit vectors, free rows spread
  /// uniformly over their allowed labels.
  FractionalAllocation uniform_allocation() const;

 private:
  ProblemInstance() = default;
  void finish_setup();

  ProblemKind kind_ = ProblemKind::Msca;
  int n_ = 0;
  int k_ = 0;
  std::vector<OraclePtr> per_label_;       // materialized cost oracle per label
  std::vector<int> terminals_;             // label -> element, empty if none
  std::vector<int> pinned_;                // element -> label or -1
  std::vector<char> forbidden_;            // n x k mask, empty if none
  std::optional<WeightedHypergraph> hyper_;
  double cut_scale_ = 1.0;
  std::optional<LabelingInstance> labeling_;
};

}  // namespace msca

#endif  // MSCA_INSTANCE_HPP
