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

#include "msca/instance.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>

#include "msca/errors.hpp"

namespace msca {

const char* to_string(ProblemKind kind) {
  switch (kind) {
    case ProblemKind::Msca: return "msca";
    case ProblemKind::SubMP: return "submp";
    case ProblemKind::HypergraphMP: return "hypergraph_mp";
    case ProblemKind::HypergraphMC: return "hypergraph_mc";
    case ProblemKind::SubLabel: return "sublabel";
  }
  return "unknown";
}

namespace {

void check_terminals(int n, const std::vector<int>& terminals) {
  if (terminals.empty()) throw std::invalid_argument("instance: no terminals");
  std::set<int> seen;
  for (int s : terminals) {
    if (s < 0 || s >= n) throw std::invalid_argument("instance: terminal out of range");
    if (!seen.insert(s).second) throw std::invalid_argument("instance: duplicate terminal");
  }
}

}  // namespace

void ProblemInstance::finish_setup() {
  pinned_.assign(n_, -1);
  for (int i = 0; i < static_cast<int>(terminals_.size()); ++i) {
    pinned_[terminals_[i]] = i;
  }
}

ProblemInstance ProblemInstance::msca(std::vector<OraclePtr> costs) {
  if (costs.empty()) throw std::invalid_argument("msca: no cost oracles");
  ProblemInstance inst;
  inst.kind_ = ProblemKind::Msca;
  inst.n_ = costs.front()->n();
  inst.k_ = static_cast<int>(costs.size());
  for (const OraclePtr& f : costs) {
    if (!f || f->n() != inst.n_) throw std::invalid_argument("msca: mismatched oracles");
  }
  inst.per_label_ = std::move(costs);
  inst.finish_setup();
  return inst;
}

ProblemInstance ProblemInstance::submp(OraclePtr cost, std::vector<int> terminals) {
  if (!cost) throw std::invalid_argument("submp: null oracle");
  ProblemInstance inst;
  inst.kind_ = ProblemKind::SubMP;
  inst.n_ = cost->n();
  inst.k_ = static_cast<int>(terminals.size());
  check_terminals(inst.n_, terminals);
  inst.per_label_.assign(inst.k_, cost);
  inst.terminals_ = std::move(terminals);
  inst.finish_setup();
  return inst;
}

ProblemInstance ProblemInstance::hypergraph_mp(WeightedHypergraph h, std::vector<int> terminals,
                                               double cut_scale) {
  h.validate();
  ProblemInstance inst;
  inst.kind_ = ProblemKind::HypergraphMP;
  inst.n_ = h.n;
  inst.k_ = static_cast<int>(terminals.size());
  check_terminals(inst.n_, terminals);
  OraclePtr cost = make_hypergraph_cut(h, cut_scale);
  inst.per_label_.assign(inst.k_, cost);
  inst.terminals_ = std::move(terminals);
  inst.hyper_ = std::move(h);
  inst.cut_scale_ = cut_scale;
  inst.finish_setup();
  return inst;
}

ProblemInstance ProblemInstance::graph_mc(int n,
                                          const std::vector<std::tuple<int, int, double>>& edges,
                                          std::vector<int> terminals) {
  return hypergraph_mp(graph_as_hypergraph(n, edges), std::move(terminals), 0.5);
}

ProblemInstance ProblemInstance::hypergraph_mc(WeightedHypergraph h, std::vector<int> terminals) {
  h.validate(/*require_reps=*/true);
  ProblemInstance inst;
  inst.kind_ = ProblemKind::HypergraphMC;
  inst.n_ = h.n;
  inst.k_ = static_cast<int>(terminals.size());
  check_terminals(inst.n_, terminals);
  OraclePtr cost = make_hypergraph_separation(h);
  inst.per_label_.assign(inst.k_, cost);
  inst.terminals_ = std::move(terminals);
  inst.hyper_ = std::move(h);
  inst.finish_setup();
  return inst;
}

ProblemInstance ProblemInstance::sublabel(LabelingInstance labeling,
                                          std::vector<std::pair<int, int>> forbidden,
                                          std::optional<WeightedHypergraph> coupling_edges) {
  if (labeling.assignment.empty()) throw std::invalid_argument("sublabel: no assignment oracles");
  if (!labeling.coupling) throw std::invalid_argument("sublabel: null coupling oracle");
  ProblemInstance inst;
  inst.kind_ = ProblemKind::SubLabel;
  inst.n_ = labeling.coupling->n();
  inst.k_ = static_cast<int>(labeling.assignment.size());
  for (const OraclePtr& g : labeling.assignment) {
    if (!g || g->n() != inst.n_) throw std::invalid_argument("sublabel: mismatched oracles");
  }
  for (int i = 0; i < inst.k_; ++i) {
    inst.per_label_.push_back(make_sum({labeling.assignment[i], labeling.coupling}));
  }
  inst.finish_setup();
  if (!forbidden.empty()) {
    inst.forbidden_.assign(static_cast<std::size_t>(inst.n_) * inst.k_, 0);
    for (auto [v, i] : forbidden) {
      if (v < 0 || v >= inst.n_ || i < 0 || i >= inst.k_) {
        throw std::invalid_argument("sublabel: forbidden pair out of range");
      }
      inst.forbidden_[static_cast<std::size_t>(v) * inst.k_ + i] = 1;
    }
    for (int v = 0; v < inst.n_; ++v) {
      if (inst.allowed_count(v) == 0) {
        throw std::invalid_argument("sublabel: element with no allowed label");
      }
    }
  }
  if (coupling_edges) {
    coupling_edges->validate();
    if (coupling_edges->n != inst.n_) {
      throw std::invalid_argument("sublabel: coupling hypergraph size mismatch");
    }
    inst.hyper_ = std::move(coupling_edges);
  }
  inst.labeling_ = std::move(labeling);
  return inst;
}

int ProblemInstance::pinned_label(int v) const {
  if (v < 0 || v >= n_) throw std::out_of_range("instance: element out of range");
  return pinned_[v];
}

int ProblemInstance::free_count() const {
  return n_ - static_cast<int>(terminals_.size());
}

bool ProblemInstance::is_forbidden(int v, int i) const {
  if (v < 0 || v >= n_ || i < 0 || i >= k_) throw std::out_of_range("instance: index out of range");
  if (pinned_[v] >= 0) return pinned_[v] != i;
  if (forbidden_.empty()) return false;
  return forbidden_[static_cast<std::size_t>(v) * k_ + i] != 0;
}

int ProblemInstance::allowed_count(int v) const {
  int count = 0;
  for (int i = 0; i < k_; ++i) {
    bool banned;
    if (pinned_[v] >= 0) {
      banned = pinned_[v] != i;
    } else if (!forbidden_.empty()) {
      banned = forbidden_[static_cast<std::size_t>(v) * k_ + i] != 0;
    } else {
      banned = false;
    }
    if (!banned) ++count;
  }
  return count;
}

const OraclePtr& ProblemInstance::label_oracle(int i) const {
  if (i < 0 || i >= k_) throw std::out_of_range("instance: label out of range");
  return per_label_[i];
}

double ProblemInstance::label_cost(int i, const Subset& s) const {
  return (*label_oracle(i))(s);
}

double ProblemInstance::cost(const Partition& p) const {
  if (p.n() != n_ || p.k != k_) throw std::invalid_argument("instance: partition shape mismatch");
  double total = 0;
  for (int i = 0; i < k_; ++i) total += label_cost(i, p.members(i));
  return total;
}

const WeightedHypergraph* ProblemInstance::hypergraph() const {
  return hyper_ ? &*hyper_ : nullptr;
}

const LabelingInstance& ProblemInstance::labeling() const {
  if (!labeling_) throw std::logic_error("instance: not a labeling instance");
  return *labeling_;
}

bool ProblemInstance::partition_feasible(const Partition& p) const {
  if (p.n() != n_ || p.k != k_) return false;
  for (int v = 0; v < n_; ++v) {
    if (p.label[v] < 0 || p.label[v] >= k_) return false;
    if (is_forbidden(v, p.label[v])) return false;
  }
  return true;
}

bool ProblemInstance::allocation_feasible(const FractionalAllocation& x, double tol) const {
  if (x.n() != n_ || x.k() != k_) return false;
  if (!x.rows_stochastic(tol)) return false;
  for (int v = 0; v < n_; ++v) {
    for (int i = 0; i < k_; ++i) {
      if (is_forbidden(v, i) && std::abs(x(v, i)) > tol) return false;
    }
  }
  return true;
}

void ProblemInstance::require_feasible(const FractionalAllocation& x, double tol) const {
  if (x.n() != n_ || x.k() != k_) {
    throw InfeasibleError("allocation shape does not match instance");
  }
  if (!x.rows_stochastic(tol)) {
    throw InfeasibleError("allocation rows are not stochastic within tolerance");
  }
  for (int v = 0; v < n_; ++v) {
    for (int i = 0; i < k_; ++i) {
      if (is_forbidden(v, i) && std::abs(x(v, i)) > tol) {
        throw InfeasibleError("allocation places mass on a pinned or forbidden pair");
      }
    }
  }
}

FractionalAllocation ProblemInstance::uniform_allocation() const {
  FractionalAllocation x(n_, k_);
  for (int v = 0; v < n_; ++v) {
    int allowed = allowed_count(v);
    double share = 1.0 / allowed;
    for (int i = 0; i < k_; ++i) {
      if (!is_forbidden(v, i)) x.set(v, i, share);
    }
  }
  return x;
}

}  // namespace msca
