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

#ifndef MSCA_ROUNDING_HPP
#define MSCA_ROUNDING_HPP

#include <limits>
#include <string>
#include <vector>

#include "msca/allocation.hpp"
#include "msca/instance.hpp"
#include "msca/oracle.hpp"
#include "msca/rng.hpp"
#include "msca/subset.hpp"

namespace msca {

/// One logged step of a rounding run.
struct TraceRecord {
  std::string stage;              // threshold / round / uncross / remainder / fallback / pick
  int label = -1;                 // affected label, or -1
  double theta = std::numeric_limits<double>::quiet_NaN();
  std::vector<int> permutation;   // label order, when one was drawn
  std::vector<int> members;       // elements touched in this step
  std::string note;
};

struct RoundingOutcome {
  Partition partition;
  double cost = 0.0;              // instance objective of the partition
  bool used_fallback = false;     // iteration cap hit or feasibility repair applied
  int rounds = 0;                 // sampling-loop iterations consumed
  std::vector<int> assigned_round;  // per element: loop round that first assigned
                                    // it (kt-style loops only, else empty)
  std::vector<TraceRecord> trace;   // filled when trace was requested
};

/// Level-set membership convention shared by every threshold rounding here:
/// v qualifies for label i at threshold theta when x(v, i) >= theta AND
/// x(v, i) > 0.  The positivity clause only matters for the measure-zero
/// draw theta = 0; it guarantees that pinned and forbidden pairs (which have
/// x = 0) are never picked up and that integral inputs round to their
/// encoded partition with certainty.

/// {v : x(v, label) >= theta} (with the positivity convention above).
Subset theta_round(const FractionalAllocation& x, int label, double theta);

/// Ratio-greedy assignment for monotone per-label costs.  Repeatedly picks
/// the (label, threshold) level set of the unassigned elements minimizing
/// cost(set) / |set| and assigns it.  Thresholds range over the distinct
/// positive entries of each restricted column.  Ties prefer the lower
/// label, then the larger set, then the lower threshold.  Deterministic.
RoundingOutcome monotone_greedy(const ProblemInstance& inst, const FractionalAllocation& x,
                                bool trace = false);

/// Repeated (label, theta) sampling: each round draws a uniform label and
/// threshold and assigns the still-unassigned part of the level set to that
/// label.  Per-element marginals equal x(v, i).  Rounds are capped at
/// 64 * k * ceil(ln(n + 1)); stragglers then take their argmax allowed
/// label (ties toward the lower label) and used_fallback is set.
RoundingOutcome kt_round(const ProblemInstance& inst, const FractionalAllocation& x, Rng& rng,
                         bool trace = false);

/// Random-permutation single-threshold rounding: draws a permutation pi of
/// the labels and one theta, sweeps pi(1)..pi(k-1) assigning unclaimed
/// level-set members, and gives the remainder to pi(k).
RoundingOutcome ckr_round(const ProblemInstance& inst, const FractionalAllocation& x, Rng& rng,
                          bool trace = false);

/// Instance-free variant used for per-edge probability experiments where
/// the label count exceeds the element count.  Requires row-stochastic x.
Partition ckr_partition(const FractionalAllocation& x, Rng& rng);

/// Single threshold drawn uniformly from (1/2, 1]; labels 1..k-1 take their
/// level sets (automatically disjoint), the remainder goes to label k.
RoundingOutcome half_round(const ProblemInstance& inst, const FractionalAllocation& x, Rng& rng,
                           bool trace = false);

/// Makes overlapping sets disjoint without raising total cost under a
/// symmetric f.  Repeatedly takes the lowest crossing pair (i < j) and
/// shrinks A_j when f(A_j - A_i) <= f(A_j), else shrinks A_i.  Returns
/// sets with: A'_i subseteq A_i, pairwise disjoint, same union, and
/// sum f(A'_i) <= sum f(A_i).  The cost guarantee needs f symmetric; the
/// routine itself runs for any oracle.
std::vector<Subset> uncross(const SubmodularOracle& f, std::vector<Subset> sets,
                            std::vector<TraceRecord>* trace = nullptr);

enum class SymVariant {
  Plain,    // threshold all k labels, uncross, remainder to the last label
  Relabel,  // largest-extension label sits out and absorbs the remainder
};

/// Shared-threshold rounding for symmetric shared-cost instances: level
/// sets at one random theta, uncrossing, remainder to the reserved label.
RoundingOutcome sym_submp_round(const ProblemInstance& inst, const FractionalAllocation& x,
                                Rng& rng, SymVariant variant, bool trace = false);

/// Labeling rounding for a symmetric coupling cost: kt-style accumulation
/// of (possibly overlapping) label sets until every element is covered,
/// then uncrossing with respect to the coupling oracle.  Monotone
/// assignment costs only shrink when sets do.  Same cap/fallback as
/// kt_round.
RoundingOutcome sym_sublabel_round(const ProblemInstance& inst, const FractionalAllocation& x,
                                   Rng& rng, bool trace = false);

}  // namespace msca

#endif  // MSCA_ROUNDING_HPP
