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

#ifndef MSCA_LP_HPP
#define MSCA_LP_HPP

#include <string>
#include <vector>

namespace msca {

enum class RowSense { LessEq, GreaterEq, Equal };

struct LpRow {
  std::vector<std::pair<int, double>> coeffs;  // (column, coefficient), sparse
  RowSense sense = RowSense::LessEq;
  double rhs = 0.0;
};

/// min c . y + offset  subject to rows, y >= 0.
struct LinearProgram {
  std::vector<std::string> col_names;
  std::vector<double> objective;
  double objective_offset = 0.0;
  std::vector<LpRow> rows;

  int num_cols() const { return static_cast<int>(objective.size()); }
  int num_rows() const { return static_cast<int>(rows.size()); }

  int add_col(std::string name, double cost);
  LpRow& add_row(RowSense sense, double rhs);

  /// Objective c . y + offset at a candidate point, no feasibility check.
  double value_at(const std::vector<double>& y) const;

  /// Largest constraint violation at y (0 when feasible; bounds included).
  double max_violation(const std::vector<double>& y) const;

  /// Plain-text listing: "min <terms> [+ offset]", a "s.t." line, then one
  /// row per line as "  r<idx>: <terms> <=|>=|= <rhs>".  Terms are sorted
  /// by column, written "<coeff> <name>" with unit coefficients elided and
  /// signs as connectors; an empty sum prints "0".
  std::string dump() const;
};

enum class LpStatus { Optimal, Infeasible, Unbounded };

const char* to_string(LpStatus s);

struct LpSolution {
  LpStatus status = LpStatus::Infeasible;
  double value = 0.0;  // includes objective_offset
  std::vector<double> y;
  int pivots = 0;
};

/// Dense two-phase primal simplex with Bland's anti-cycling rule.
LpSolution solve_simplex(const LinearProgram& lp, double tol = 1e-9);

}  // namespace msca

#endif  // MSCA_LP_HPP
