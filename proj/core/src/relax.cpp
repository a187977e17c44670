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

#include "msca/relax.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

#include "msca/lovasz.hpp"
#include "msca/rng.hpp"

namespace msca {

const char* to_string(SolveStatus s) {
  switch (s) {
    case SolveStatus::Optimal: return "optimal";
    case SolveStatus::ToleranceReached: return "tolerance_reached";
    case SolveStatus::IterationLimit: return "iteration_limit";
  }
  return "?";
}

namespace {

std::string col_name(const char* tag, int a, int b) {
  return std::string(tag) + "[" + std::to_string(a) + "," + std::to_string(b) + "]";
}

// Columns for the free (element, label) decisions plus the stochastic rows.
LpModel make_decision_columns(const ProblemInstance& inst) {
  LpModel m;
  m.n = inst.n();
  m.k = inst.k();
  m.base = FractionalAllocation(m.n, m.k);
  m.var.assign(m.n, std::vector<int>(m.k, -1));
  for (int v = 0; v < m.n; ++v) {
    const int pin = inst.pinned_label(v);
    if (pin >= 0) {
      m.base.set(v, pin, 1.0);
      continue;
    }
    for (int i = 0; i < m.k; ++i) {
      if (!inst.is_forbidden(v, i)) m.var[v][i] = m.lp.add_col(col_name("x", v, i), 0.0);
    }
  }
  for (int v = 0; v < m.n; ++v) {
    if (inst.pinned_label(v) >= 0) continue;
    LpRow& row = m.lp.add_row(RowSense::Equal, 1.0);
    for (int i = 0; i < m.k; ++i) {
      if (m.var[v][i] >= 0) row.coeffs.emplace_back(m.var[v][i], 1.0);
    }
  }
  return m;
}

// x(v, i) <= bound  becomes  x - bound <= 0, constants folded into the rhs.
void add_upper_link(LpModel& m, int v, int i, int bound_col) {
  LpRow& row = m.lp.add_row(RowSense::LessEq, 0.0);
  row.coeffs.emplace_back(bound_col, -1.0);
  if (m.var[v][i] >= 0) {
    row.coeffs.emplace_back(m.var[v][i], 1.0);
  } else {
    row.rhs -= m.base(v, i);
  }
}

// bound <= x(v, i)  becomes  bound - x <= 0.
void add_lower_link(LpModel& m, int v, int i, int bound_col) {
  LpRow& row = m.lp.add_row(RowSense::LessEq, 0.0);
  row.coeffs.emplace_back(bound_col, 1.0);
  if (m.var[v][i] >= 0) {
    row.coeffs.emplace_back(m.var[v][i], -1.0);
  } else {
    row.rhs += m.base(v, i);
  }
}

// Adds hi/lo (or lo only) columns per (edge, label) with the given objective
// weight per unit of spread or representative gap.
void add_edge_terms(LpModel& m, const ProblemInstance& inst, bool spread, double scale) {
  const WeightedHypergraph* h = inst.hypergraph();
  if (h == nullptr) throw std::invalid_argument("instance has no edge structure");
  m.edges = *h;
  m.aux_start = m.lp.num_cols();
  for (int e = 0; e < static_cast<int>(h->edges.size()); ++e) {
    const Hyperedge& edge = h->edges[e];
    const double w = edge.weight * scale;
    for (int i = 0; i < m.k; ++i) {
      if (spread) {
        const int hi = m.lp.add_col(col_name("hi", e, i), w);
        m.aux.push_back({e, i, true});
        for (int v : edge.verts) add_upper_link(m, v, i, hi);
      } else {
        if (m.var[edge.rep][i] >= 0) {
          m.lp.objective[m.var[edge.rep][i]] += w;
        } else {
          m.lp.objective_offset += w * m.base(edge.rep, i);
        }
      }
      const int lo = m.lp.add_col(col_name("lo", e, i), -w);
      m.aux.push_back({e, i, false});
      for (int v : edge.verts) add_lower_link(m, v, i, lo);
    }
  }
}

// Linear assignment costs c_i(v) = g_i({v}) - g_i(empty), offset g_i(empty).
void add_modular_costs(LpModel& m,
                       const std::vector<OraclePtr>& costs) {
  for (int i = 0; i < m.k; ++i) {
    const SubmodularOracle& g = *costs[i];
    if (g.family() != "modular") {
      throw std::invalid_argument("linear formulation needs modular assignment costs");
    }
    const double at_empty = g(Subset::empty_set(m.n));
    m.lp.objective_offset += at_empty;
    for (int v = 0; v < m.n; ++v) {
      const double c = g(Subset::singleton(m.n, v)) - at_empty;
      if (m.var[v][i] >= 0) {
        m.lp.objective[m.var[v][i]] += c;
      } else {
        m.lp.objective_offset += c * m.base(v, i);
      }
    }
  }
}

// True when every coupling edge carries a representative.
bool coupling_uses_reps(const WeightedHypergraph& h) {
  bool any = false, all = true;
  for (const Hyperedge& e : h.edges) {
    if (e.rep >= 0) any = true;
    else all = false;
  }
  if (any && !all) throw std::invalid_argument("mixed representative usage in coupling edges");
  return any && all;
}

}  // namespace

LpModel build_hmp_lp(const ProblemInstance& inst) {
  if (inst.kind() != ProblemKind::HypergraphMP) {
    throw std::invalid_argument("build_hmp_lp: wrong instance kind");
  }
  LpModel m = make_decision_columns(inst);
  add_edge_terms(m, inst, /*spread=*/true, inst.cut_scale());
  return m;
}

LpModel build_hmc_lp(const ProblemInstance& inst) {
  if (inst.kind() != ProblemKind::HypergraphMC) {
    throw std::invalid_argument("build_hmc_lp: wrong instance kind");
  }
  LpModel m = make_decision_columns(inst);
  add_edge_terms(m, inst, /*spread=*/false, 1.0);
  return m;
}

LpModel build_sublabel_lp(const ProblemInstance& inst) {
  if (inst.kind() != ProblemKind::SubLabel) {
    throw std::invalid_argument("build_sublabel_lp: wrong instance kind");
  }
  const WeightedHypergraph* h = inst.hypergraph();
  if (h == nullptr) {
    throw std::invalid_argument("build_sublabel_lp: coupling cost has no edge structure");
  }
  LpModel m = make_decision_columns(inst);
  add_modular_costs(m, inst.labeling().assignment);
  const bool reps = coupling_uses_reps(*h);
  add_edge_terms(m, inst, /*spread=*/!reps, reps ? 1.0 : inst.cut_scale());
  return m;
}

LpModel build_modular_lp(const ProblemInstance& inst) {
  if (inst.kind() != ProblemKind::Msca) {
    throw std::invalid_argument("build_modular_lp: wrong instance kind");
  }
  LpModel m = make_decision_columns(inst);
  std::vector<OraclePtr> costs;
  for (int i = 0; i < inst.k(); ++i) costs.push_back(inst.label_oracle(i));
  add_modular_costs(m, costs);
  m.aux_start = m.lp.num_cols();
  return m;
}

FractionalAllocation LpModel::to_allocation(const std::vector<double>& y) const {
  FractionalAllocation x = base;
  for (int v = 0; v < n; ++v) {
    bool free = false;
    double sum = 0.0;
    for (int i = 0; i < k; ++i) {
      if (var[v][i] < 0) continue;
      free = true;
      const double t = std::clamp(y[var[v][i]], 0.0, 1.0);
      x.set(v, i, t);
      sum += t;
    }
    if (free && sum > 0.0 && std::abs(sum - 1.0) > 1e-12) {
      for (int i = 0; i < k; ++i) {
        if (var[v][i] >= 0) x.set(v, i, x(v, i) / sum);
      }
    }
  }
  return x;
}

std::vector<double> LpModel::from_allocation(const FractionalAllocation& x) const {
  if (x.n() != n || x.k() != k) {
    throw std::invalid_argument("LpModel::from_allocation: shape mismatch");
  }
  std::vector<double> y(lp.num_cols(), 0.0);
  for (int v = 0; v < n; ++v) {
    for (int i = 0; i < k; ++i) {
      if (var[v][i] >= 0) y[var[v][i]] = x(v, i);
    }
  }
  for (std::size_t a = 0; a < aux.size(); ++a) {
    const AuxVar& d = aux[a];
    auto [lo, hi] = edge_interval(edges.edges[d.edge], x, d.label);
    y[aux_start + static_cast<int>(a)] = d.is_upper ? hi : lo;
  }
  return y;
}

double LpModel::objective_at(const FractionalAllocation& x) const {
  return lp.value_at(from_allocation(x));
}

LpSolveResult solve_lp(const ProblemInstance& inst, double tol) {
  LpModel model;
  switch (inst.kind()) {
    case ProblemKind::HypergraphMP: model = build_hmp_lp(inst); break;
    case ProblemKind::HypergraphMC: model = build_hmc_lp(inst); break;
    case ProblemKind::SubLabel: model = build_sublabel_lp(inst); break;
    case ProblemKind::Msca: model = build_modular_lp(inst); break;
    default:
      throw std::invalid_argument("no linear formulation for this instance kind");
  }
  const LpSolution sol = solve_simplex(model.lp, tol);
  if (sol.status != LpStatus::Optimal) {
    throw std::runtime_error(std::string("relaxation solve failed: ") + to_string(sol.status));
  }
  LpSolveResult out;
  out.x = model.to_allocation(sol.y);
  out.report.status = SolveStatus::Optimal;
  out.report.value = sol.value;
  out.report.lower_bound = sol.value;
  out.report.iterations = sol.pivots;
  out.model = std::move(model);
  return out;
}

std::vector<double> project_simplex(const std::vector<double>& p) {
  return project_simplex(p, std::vector<char>(p.size(), 1));
}

std::vector<double> project_simplex(const std::vector<double>& p,
                                    const std::vector<char>& allowed) {
  if (p.size() != allowed.size()) {
    throw std::invalid_argument("project_simplex: mask size mismatch");
  }
  std::vector<double> vals;
  vals.reserve(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (allowed[i]) vals.push_back(p[i]);
  }
  if (vals.empty()) throw std::invalid_argument("project_simplex: no allowed coordinates");

  std::vector<double> sorted = vals;
  std::sort(sorted.begin(), sorted.end(), std::greater<double>());
  double prefix = 0.0, tau = 0.0;
  for (std::size_t j = 0; j < sorted.size(); ++j) {
    prefix += sorted[j];
    const double t = (prefix - 1.0) / static_cast<double>(j + 1);
    if (j + 1 == sorted.size() || sorted[j + 1] <= t) {
      tau = t;
      break;
    }
  }
  std::vector<double> out(p.size(), 0.0);
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (allowed[i]) out[i] = std::max(0.0, p[i] - tau);
  }
  return out;
}

std::vector<double> project_simplex(const std::vector<double>& p, int pinned) {
  if (pinned < 0 || pinned >= static_cast<int>(p.size())) {
    throw std::invalid_argument("project_simplex: pinned coordinate out of range");
  }
  std::vector<double> out(p.size(), 0.0);
  out[pinned] = 1.0;
  return out;
}

SubgradientResult solve_subgradient(const ProblemInstance& inst,
                                    const SubgradientOptions& options) {
  const int n = inst.n(), k = inst.k();
  FractionalAllocation x = inst.uniform_allocation();

  std::vector<std::vector<char>> allowed(n, std::vector<char>(k, 0));
  for (int v = 0; v < n; ++v) {
    for (int i = 0; i < k; ++i) allowed[v][i] = inst.is_forbidden(v, i) ? 0 : 1;
  }

  Rng rng(options.seed);
  for (int v = 0; v < n; ++v) {
    if (inst.pinned_label(v) >= 0 || inst.allowed_count(v) < 2) continue;
    std::vector<double> row = x.row(v);
    for (int i = 0; i < k; ++i) {
      if (allowed[v][i]) row[i] += 1e-3 * (rng.next_unit() - 0.5);
    }
    x.set_row(v, project_simplex(row, allowed[v]));
  }

  const bool polyak = std::isfinite(options.lower_bound);
  const double lb = options.lower_bound;

  SubgradientResult res;
  res.report.lower_bound = options.lower_bound;
  double best = std::numeric_limits<double>::infinity();
  double step_c = 0.0;

  auto note = [&](double value, const FractionalAllocation& at) {
    if (value < best) {
      best = value;
      res.x = at;
    }
  };

  int t = 0;
  SolveStatus status = SolveStatus::IterationLimit;
  for (t = 1; t <= options.max_iters; ++t) {
    const double value = objective(inst, x);
    res.history.push_back(value);
    note(value, x);

    if (polyak && best - lb <= std::max(options.tol, 0.0)) {
      status = best - lb <= 1e-9 ? SolveStatus::Optimal : SolveStatus::ToleranceReached;
      break;
    }

    // Stacked per-label subgradients; pinned rows do not move.
    std::vector<std::vector<double>> g(k);
    for (int i = 0; i < k; ++i) g[i] = lovasz_subgradient(*inst.label_oracle(i), x.column(i));
    double norm_sq = 0.0;
    for (int v = 0; v < n; ++v) {
      if (inst.pinned_label(v) >= 0) continue;
      for (int i = 0; i < k; ++i) norm_sq += g[i][v] * g[i][v];
    }
    if (norm_sq <= 1e-24) {
      status = SolveStatus::Optimal;
      break;
    }

    double step;
    if (polyak) {
      step = (value - lb) / norm_sq;
      if (step <= 0.0) step = options.tol / std::sqrt(norm_sq);
    } else {
      if (t == 1) step_c = options.step_scale * std::max(value, 1e-12) / norm_sq;
      step = step_c / std::sqrt(static_cast<double>(t));
    }

    for (int v = 0; v < n; ++v) {
      if (inst.pinned_label(v) >= 0) continue;
      std::vector<double> row = x.row(v);
      for (int i = 0; i < k; ++i) row[i] -= step * g[i][v];
      x.set_row(v, project_simplex(row, allowed[v]));
    }
  }
  if (t > options.max_iters) {
    note(objective(inst, x), x);
    t = options.max_iters;
  }

  res.report.status = status;
  res.report.value = best;
  res.report.iterations = t;
  return res;
}

}  // namespace msca
