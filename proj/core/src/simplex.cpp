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

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "msca/lp.hpp"

namespace msca {
namespace {

// Dense tableau state.  Column layout: structural | slack/surplus | artificial.
struct Tableau {
  int cols = 0;
  std::vector<std::vector<double>> a;  // m rows of `cols` entries
  std::vector<double> b;               // rhs, kept >= 0
  std::vector<int> basis;              // basic column per row
  std::vector<double> red;             // reduced cost row
  double obj = 0.0;                    // current objective of the active phase
  int pivots = 0;

  int rows() const { return static_cast<int>(a.size()); }

  void pivot(int pr, int pc) {
    std::vector<double>& prow = a[pr];
    const double piv = prow[pc];
    for (double& v : prow) v /= piv;
    b[pr] /= piv;
    prow[pc] = 1.0;
    for (int i = 0; i < rows(); ++i) {
      if (i == pr) continue;
      const double m = a[i][pc];
      if (m == 0.0) continue;
      for (int j = 0; j < cols; ++j) a[i][j] -= m * prow[j];
      a[i][pc] = 0.0;
      b[i] -= m * b[pr];
      if (b[i] < 0.0 && b[i] > -1e-11) b[i] = 0.0;
    }
    const double m = red[pc];
    if (m != 0.0) {
      for (int j = 0; j < cols; ++j) red[j] -= m * prow[j];
      red[pc] = 0.0;
      obj += m * b[pr];  // step length b[pr] at reduced cost m
    }
    basis[pr] = pc;
    ++pivots;
  }

  // Reduced costs and objective for the cost vector `c` (size `cols`).
  void set_costs(const std::vector<double>& c) {
    red = c;
    obj = 0.0;
    for (int i = 0; i < rows(); ++i) {
      const double cb = c[basis[i]];
      if (cb == 0.0) continue;
      for (int j = 0; j < cols; ++j) red[j] -= cb * a[i][j];
      obj += cb * b[i];
    }
  }

  // Bland's rule loop over columns [0, limit).  Returns false on unbounded.
  bool optimize(int limit, double tol, long max_pivots) {
    for (long it = 0; it < max_pivots; ++it) {
      int enter = -1;
      for (int j = 0; j < limit; ++j) {
        if (red[j] < -tol) {
          enter = j;
          break;
        }
      }
      if (enter < 0) return true;
      int leave = -1;
      double best = 0.0;
      for (int i = 0; i < rows(); ++i) {
        if (a[i][enter] <= tol) continue;
        const double ratio = std::max(b[i], 0.0) / a[i][enter];
        if (leave < 0 || ratio < best - 1e-12 ||
            (ratio < best + 1e-12 && basis[i] < basis[leave])) {
          leave = i;
          best = ratio;
        }
      }
      if (leave < 0) return false;
      pivot(leave, enter);
    }
    throw std::runtime_error("simplex: pivot limit exceeded");
  }
};

}  // namespace

LpSolution solve_simplex(const LinearProgram& lp, double tol) {
  const int n = lp.num_cols();
  const int m = lp.num_rows();

  // Normalized dense rows with rhs >= 0.
  std::vector<std::vector<double>> rows(m, std::vector<double>(n, 0.0));
  std::vector<double> rhs(m, 0.0);
  std::vector<RowSense> sense(m);
  for (int i = 0; i < m; ++i) {
    const LpRow& r = lp.rows[i];
    for (auto [j, c] : r.coeffs) {
      if (j < 0 || j >= n) throw std::invalid_argument("solve_simplex: bad column index");
      rows[i][j] += c;
    }
    rhs[i] = r.rhs;
    sense[i] = r.sense;
    if (rhs[i] < 0.0) {
      for (double& v : rows[i]) v = -v;
      rhs[i] = -rhs[i];
      if (sense[i] == RowSense::LessEq) sense[i] = RowSense::GreaterEq;
      else if (sense[i] == RowSense::GreaterEq) sense[i] = RowSense::LessEq;
    }
  }

  int n_slack = 0;
  for (int i = 0; i < m; ++i) {
    if (sense[i] != RowSense::Equal) ++n_slack;
  }
  const int art_start = n + n_slack;
  int n_art = 0;
  for (int i = 0; i < m; ++i) {
    if (sense[i] != RowSense::LessEq) ++n_art;
  }
  const int total = art_start + n_art;

  Tableau t;
  t.cols = total;
  t.a.assign(m, std::vector<double>(total, 0.0));
  t.b = rhs;
  t.basis.assign(m, -1);
  int slack_at = n;
  int art_at = art_start;
  for (int i = 0; i < m; ++i) {
    std::copy(rows[i].begin(), rows[i].end(), t.a[i].begin());
    if (sense[i] == RowSense::LessEq) {
      t.a[i][slack_at] = 1.0;
      t.basis[i] = slack_at++;
    } else if (sense[i] == RowSense::GreaterEq) {
      t.a[i][slack_at++] = -1.0;
      t.a[i][art_at] = 1.0;
      t.basis[i] = art_at++;
    } else {
      t.a[i][art_at] = 1.0;
      t.basis[i] = art_at++;
    }
  }

  const long max_pivots = 200000L + 200L * static_cast<long>(m + total);
  LpSolution sol;

  if (n_art > 0) {
    std::vector<double> c1(total, 0.0);
    for (int j = art_start; j < total; ++j) c1[j] = 1.0;
    t.set_costs(c1);
    t.optimize(total, tol, max_pivots);  // bounded below by 0, cannot be unbounded
    if (t.obj > 1e-7) {
      sol.status = LpStatus::Infeasible;
      sol.pivots = t.pivots;
      return sol;
    }
    // Drive remaining artificials out of the basis; drop redundant rows.
    for (int i = t.rows() - 1; i >= 0; --i) {
      if (t.basis[i] < art_start) continue;
      int pc = -1;
      for (int j = 0; j < art_start; ++j) {
        if (std::abs(t.a[i][j]) > 1e-8) {
          pc = j;
          break;
        }
      }
      if (pc >= 0) {
        t.pivot(i, pc);
      } else {
        t.a.erase(t.a.begin() + i);
        t.b.erase(t.b.begin() + i);
        t.basis.erase(t.basis.begin() + i);
      }
    }
  }

  // Phase 2 over structural + slack columns only.
  t.cols = art_start;
  for (auto& row : t.a) row.resize(art_start);
  std::vector<double> c2(art_start, 0.0);
  std::copy(lp.objective.begin(), lp.objective.end(), c2.begin());
  t.set_costs(c2);
  if (!t.optimize(art_start, tol, max_pivots)) {
    sol.status = LpStatus::Unbounded;
    sol.pivots = t.pivots;
    return sol;
  }

  sol.status = LpStatus::Optimal;
  sol.y.assign(n, 0.0);
  for (int i = 0; i < t.rows(); ++i) {
    if (t.basis[i] < n) sol.y[t.basis[i]] = std::max(t.b[i], 0.0);
  }
  sol.value = lp.value_at(sol.y);
  sol.pivots = t.pivots;
  return sol;
}

}  // namespace msca
