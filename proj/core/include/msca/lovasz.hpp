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

#ifndef MSCA_LOVASZ_HPP
#define MSCA_LOVASZ_HPP

#include <vector>

#include "msca/allocation.hpp"
#include "msca/instance.hpp"
#include "msca/oracle.hpp"
#include "msca/subset.hpp"

namespace msca {

/// {v : x_v >= theta}.  theta = 0 returns the full ground set.
Subset threshold_set(const std::vector<double>& x, double theta);

/// Continuous extension value f^(x) for x in [0,1]^n.
///
/// Sorts coordinates descending (ties by element id), then accumulates
/// sum_{p=0..n} (x_p - x_{p+1}) * f(S_p) with x_0 = 1, x_{n+1} = 0 and S_p
/// the top-p prefix set.  Equals the expectation of f over threshold sets
/// with a uniform threshold.
double lovasz_eval(const SubmodularOracle& f, const std::vector<double>& x);

/// Subgradient of the extension at x: g[v_p] = f(S_p) - f(S_{p-1}) along the
/// same descending order.  Satisfies g . x = lovasz_eval(f, x) when
/// f(empty) = 0.  The extension value is independent of how equal
/// coordinates are ordered; the subgradient is not, so this fixes the
/// id-stable order.
std::vector<double> lovasz_subgradient(const SubmodularOracle& f, const std::vector<double>& x);

/// Relaxation objective sum_i f_i^(x_i).  Throws InfeasibleError when x is
/// not feasible for the instance within tol.
double objective(const ProblemInstance& inst, const FractionalAllocation& x, double tol = 1e-6);

/// Per-edge distances induced by an allocation.
///
/// spread: sum over labels of (max over e) - (min over e) of x(., i);
/// rep_gap: sum over labels of x(rep, i) - (min over e) of x(., i).
/// The scaled-cut objective equals sum_e w(e) * scale * spread(e) and the
/// separation objective equals sum_e w(e) * rep_gap(e).
double edge_spread(const Hyperedge& e, const FractionalAllocation& x, int label);
double edge_spread_total(const Hyperedge& e, const FractionalAllocation& x);
double edge_rep_gap(const Hyperedge& e, const FractionalAllocation& x, int label);
double edge_rep_gap_total(const Hyperedge& e, const FractionalAllocation& x);

/// Interval [min over e, max over e] of column i restricted to edge e.
std::pair<double, double> edge_interval(const Hyperedge& e, const FractionalAllocation& x,
                                        int label);

}  // namespace msca

#endif  // MSCA_LOVASZ_HPP
