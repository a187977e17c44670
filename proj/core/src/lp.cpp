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

#include "msca/lp.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace msca {

int LinearProgram::add_col(std::string name, double cost) {
  col_names.push_back(std::move(name));
  objective.push_back(cost);
  return num_cols() - 1;
}

LpRow& LinearProgram::add_row(RowSense sense, double rhs) {
  rows.push_back(LpRow{{}, sense, rhs});
  return rows.back();
}

double LinearProgram::value_at(const std::vector<double>& y) const {
  if (static_cast<int>(y.size()) != num_cols()) {
    throw std::invalid_argument("LinearProgram::value_at: size mismatch");
  }
  double v = objective_offset;
  for (int j = 0; j < num_cols(); ++j) v += objective[j] * y[j];
  return v;
}

double LinearProgram::max_violation(const std::vector<double>& y) const {
  if (static_cast<int>(y.size()) != num_cols()) {
    throw std::invalid_argument("LinearProgram::max_violation: size mismatch");
  }
  double worst = 0.0;
  for (double v : y) worst = std::max(worst, -v);
  for (const LpRow& r : rows) {
    double lhs = 0.0;
    for (auto [j, c] : r.coeffs) lhs += c * y[j];
    switch (r.sense) {
      case RowSense::LessEq: worst = std::max(worst, lhs - r.rhs); break;
      case RowSense::GreaterEq: worst = std::max(worst, r.rhs - lhs); break;
      case RowSense::Equal: worst = std::max(worst, std::abs(lhs - r.rhs)); break;
    }
  }
  return worst;
}

namespace {

void append_terms(std::ostringstream& out,
                  const std::vector<std::pair<int, double>>& terms,
                  const std::vector<std::string>& names) {
  bool first = true;
  for (auto [j, c] : terms) {
    if (c == 0.0) continue;
    if (first) {
      if (c < 0.0) out << "-";
      first = false;
    } else {
      out << (c < 0.0 ? " - " : " + ");
    }
    const double a = std::abs(c);
    if (a != 1.0) out << a << " ";
    out << names[j];
  }
  if (first) out << "0";
}

}  // namespace

const char* to_string(LpStatus s) {
  switch (s) {
    case LpStatus::Optimal: return "optimal";
    case LpStatus::Infeasible: return "infeasible";
    case LpStatus::Unbounded: return "unbounded";
  }
  return "?";
}

std::string LinearProgram::dump() const {
  std::ostringstream out;
  out << "min ";
  std::vector<std::pair<int, double>> obj;
  for (int j = 0; j < num_cols(); ++j) {
    if (objective[j] != 0.0) obj.emplace_back(j, objective[j]);
  }
  append_terms(out, obj, col_names);
  if (objective_offset != 0.0) out << " + " << objective_offset;
  out << "\ns.t.\n";
  for (int r = 0; r < num_rows(); ++r) {
    out << "  r" << r << ": ";
    auto sorted = rows[r].coeffs;
    std::sort(sorted.begin(), sorted.end());
    append_terms(out, sorted, col_names);
    switch (rows[r].sense) {
      case RowSense::LessEq: out << " <= "; break;
      case RowSense::GreaterEq: out << " >= "; break;
      case RowSense::Equal: out << " = "; break;
    }
    out << rows[r].rhs << "\n";
  }
  out << "  all vars >= 0\n";
  return out.str();
}

}  // namespace msca
