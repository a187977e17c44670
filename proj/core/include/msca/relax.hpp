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

#ifndef MSCA_RELAX_HPP
#define MSCA_RELAX_HPP

#include <cstdint>
#include <limits>
#include <vector>

#include "msca/allocation.hpp"
#include "msca/hypergraph.hpp"
#include "msca/instance.hpp"
#include "msca/lp.hpp"

namespace msca {

enum class SolveStatus { Optimal, ToleranceReached, IterationLimit };
const char* to_string(SolveStatus s);

struct SolverReport {
  SolveStatus status = SolveStatus::IterationLimit;
  double value = 0.0;  // objective at the returned allocation
  double lower_bound = std::numeric_limits<double>::quiet_NaN();  // certified when finite
  int iterations = 0;
};

/// Linear formulation of the relaxation for cut-structured instances.
///
/// One column per (free element, allowed label) plus per-edge auxiliary
/// columns tracking the column minimum (`lo`) and, for spread objectives,
/// the column maximum (`hi`) over the edge.  Pinned and forbidden entries
/// are substituted as constants, so the LP only ranges over true decisions.
struct LpModel {
  LinearProgram lp;
  int n = 0;
  int k = 0;
  std::vector<std::vector<int>> var;  // var[v][i]: column index or -1
  FractionalAllocation base;          // pinned rows set, all else zero
  WeightedHypergraph edges;           // empty for the plain modular model
  struct AuxVar {
    int edge = -1;
    int label = -1;
    bool is_upper = false;
  };
  int aux_start = 0;
  std::vector<AuxVar> aux;  // aux[j - aux_start] describes column j

  /// Allocation from an LP point; free rows renormalized against drift.
  FractionalAllocation to_allocation(const std::vector<double>& y) const;

  /// LP point whose structural part matches x and whose auxiliary columns
  /// take their implied values (edge minima / maxima).
  std::vector<double> from_allocation(const FractionalAllocation& x) const;

  /// LP objective evaluated at the point implied by x.
  double objective_at(const FractionalAllocation& x) const;
};

/// Spread objective sum_e w(e) * scale * sum_i (max - min).
LpModel build_hmp_lp(const ProblemInstance& inst);
/// Representative-gap objective sum_e w(e) * sum_i (x(rep, i) - min).
LpModel build_hmc_lp(const ProblemInstance& inst);
/// Per-label modular costs plus a coupling cut or representative-gap term.
LpModel build_sublabel_lp(const ProblemInstance& inst);
/// Purely modular label costs, no edge terms.
LpModel build_modular_lp(const ProblemInstance& inst);

struct LpSolveResult {
  SolverReport report;
  FractionalAllocation x;
  LpModel model;
};

/// Builds the matching formulation for the instance kind and solves it.
/// Throws std::invalid_argument when the instance has no linear formulation.
LpSolveResult solve_lp(const ProblemInstance& inst, double tol = 1e-9);

/// Euclidean projection onto {p >= 0, sum p = 1}.  The masked overload
/// forces coordinates with allowed[i] == 0 to zero; the pinned overload
/// returns the unit vector at the pinned coordinate.
std::vector<double> project_simplex(const std::vector<double>& p);
std::vector<double> project_simplex(const std::vector<double>& p,
                                    const std::vector<char>& allowed);
std::vector<double> project_simplex(const std::vector<double>& p, int pinned);

struct SubgradientOptions {
  int max_iters = 2000;
  double tol = 1e-6;         // gap target when a lower bound is supplied
  double step_scale = 1.0;   // multiplies the default 1/sqrt(t) step
  double lower_bound = std::numeric_limits<double>::quiet_NaN();
  std::uint64_t seed = 0;    // start-point jitter
};

struct SubgradientResult {
  SolverReport report;
  FractionalAllocation x;       // best iterate seen
  std::vector<double> history;  // objective value per iteration
};

/// Projected subgradient descent on the relaxation objective.  Works for any
/// instance kind; uses Polyak steps when options.lower_bound is finite.
SubgradientResult solve_subgradient(const ProblemInstance& inst,
                                    const SubgradientOptions& options = {});

}  // namespace msca

#endif  // MSCA_RELAX_HPP
