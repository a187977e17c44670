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

#include "msca/rounding.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "msca/lovasz.hpp"

namespace msca {
namespace {

bool qualifies(double value, double theta) { return value >= theta && value > 0.0; }

int sampling_cap(int n, int k) {
  return 64 * k * static_cast<int>(std::ceil(std::log(static_cast<double>(n) + 1.0)));
}

// Argmax of x(v, .) over allowed labels, ties toward the lower label.
int fallback_label(const ProblemInstance& inst, const FractionalAllocation& x, int v) {
  int best = -1;
  double best_val = -1.0;
  for (int i = 0; i < inst.k(); ++i) {
    if (inst.is_forbidden(v, i)) continue;
    if (x(v, i) > best_val) {
      best = i;
      best_val = x(v, i);
    }
  }
  if (best < 0) throw std::logic_error("fallback_label: element has no allowed label");
  return best;
}

void add_trace(RoundingOutcome& out, bool enabled, TraceRecord rec) {
  if (enabled) out.trace.push_back(std::move(rec));
}

// Reassigns elements that landed on a forbidden label (possible only for
// remainder labels of threshold sweeps) to their argmax allowed label.
void repair_forbidden(const ProblemInstance& inst, const FractionalAllocation& x,
                      RoundingOutcome& out, bool trace) {
  if (!inst.has_forbidden()) return;
  for (int v = 0; v < inst.n(); ++v) {
    if (!inst.is_forbidden(v, out.partition.label[v])) continue;
    const int to = fallback_label(inst, x, v);
    add_trace(out, trace, {"fallback", to, std::numeric_limits<double>::quiet_NaN(), {}, {v},
                           "forbidden remainder label repaired"});
    out.partition.label[v] = to;
    out.used_fallback = true;
  }
}

void finish(const ProblemInstance& inst, RoundingOutcome& out) {
  out.partition.validate();
  out.cost = inst.cost(out.partition);
}

// Sequential threshold sweep: labels 0..k-2 claim their level sets among
// the still-unassigned elements; the remainder goes to label k-1.
Partition threshold_sweep(const FractionalAllocation& x, double theta) {
  const int n = x.n(), k = x.k();
  Partition p;
  p.label.assign(n, k - 1);
  p.k = k;
  std::vector<char> taken(n, 0);
  for (int i = 0; i < k - 1; ++i) {
    for (int v = 0; v < n; ++v) {
      if (!taken[v] && qualifies(x(v, i), theta)) {
        taken[v] = 1;
        p.label[v] = i;
      }
    }
  }
  return p;
}

}  // namespace

Subset theta_round(const FractionalAllocation& x, int label, double theta) {
  if (label < 0 || label >= x.k()) throw std::invalid_argument("theta_round: bad label");
  Subset s = Subset::empty_set(x.n());
  for (int v = 0; v < x.n(); ++v) {
    if (qualifies(x(v, label), theta)) s.insert(v);
  }
  return s;
}

RoundingOutcome monotone_greedy(const ProblemInstance& inst, const FractionalAllocation& x,
                                bool trace) {
  inst.require_feasible(x);
  const int n = inst.n(), k = inst.k();
  RoundingOutcome out;
  out.partition.label.assign(n, -1);
  out.partition.k = k;

  std::vector<char> unassigned(n, 1);
  int remaining = n;
  while (remaining > 0) {
    double best_ratio = std::numeric_limits<double>::infinity();
    int best_label = -1;
    double best_theta = 0.0;
    std::vector<int> best_members;

    for (int i = 0; i < k; ++i) {
      std::vector<double> levels;
      for (int v = 0; v < n; ++v) {
        if (unassigned[v] && !inst.is_forbidden(v, i) && x(v, i) > 0.0) {
          levels.push_back(x(v, i));
        }
      }
      if (levels.empty()) continue;
      std::sort(levels.begin(), levels.end());
      levels.erase(std::unique(levels.begin(), levels.end()), levels.end());
      for (double theta : levels) {
        Subset set = Subset::empty_set(n);
        std::vector<int> members;
        for (int v = 0; v < n; ++v) {
          if (unassigned[v] && !inst.is_forbidden(v, i) && qualifies(x(v, i), theta)) {
            set.insert(v);
            members.push_back(v);
          }
        }
        const double ratio =
            inst.label_cost(i, set) / static_cast<double>(members.size());
        const bool better =
            ratio < best_ratio ||
            (ratio == best_ratio &&
             (i < best_label ||
              (i == best_label && (members.size() > best_members.size() ||
                                   (members.size() == best_members.size() &&
                                    theta < best_theta)))));
        if (better) {
          best_ratio = ratio;
          best_label = i;
          best_theta = theta;
          best_members = std::move(members);
        }
      }
    }
    if (best_label < 0) throw std::logic_error("monotone_greedy: no candidate level set");
    for (int v : best_members) {
      out.partition.label[v] = best_label;
      unassigned[v] = 0;
    }
    remaining -= static_cast<int>(best_members.size());
    ++out.rounds;
    add_trace(out, trace,
              {"pick", best_label, best_theta, {}, best_members,
               "ratio " + std::to_string(best_ratio)});
  }
  finish(inst, out);
  return out;
}

RoundingOutcome kt_round(const ProblemInstance& inst, const FractionalAllocation& x, Rng& rng,
                         bool trace) {
  inst.require_feasible(x);
  const int n = inst.n(), k = inst.k();
  RoundingOutcome out;
  out.partition.label.assign(n, -1);
  out.partition.k = k;
  out.assigned_round.assign(n, -1);

  const int cap = sampling_cap(n, k);
  int assigned = 0;
  while (assigned < n && out.rounds < cap) {
    const int i = rng.next_below(k);
    const double theta = rng.next_unit();
    ++out.rounds;
    std::vector<int> members;
    for (int v = 0; v < n; ++v) {
      if (out.partition.label[v] < 0 && !inst.is_forbidden(v, i) && qualifies(x(v, i), theta)) {
        out.partition.label[v] = i;
        out.assigned_round[v] = out.rounds;
        members.push_back(v);
      }
    }
    assigned += static_cast<int>(members.size());
    add_trace(out, trace, {"round", i, theta, {}, members, ""});
  }
  if (assigned < n) {
    out.used_fallback = true;
    for (int v = 0; v < n; ++v) {
      if (out.partition.label[v] >= 0) continue;
      const int to = fallback_label(inst, x, v);
      out.partition.label[v] = to;
      out.assigned_round[v] = cap + 1 + v;  // stragglers count as separate rounds
      add_trace(out, trace, {"fallback", to, std::numeric_limits<double>::quiet_NaN(), {}, {v},
                             "iteration cap reached"});
    }
  }
  finish(inst, out);
  return out;
}

Partition ckr_partition(const FractionalAllocation& x, Rng& rng) {
  const int k = x.k();
  const std::vector<int> pi = rng.permutation(k);
  const double theta = rng.next_unit();
  const int n = x.n();
  Partition p;
  p.label.assign(n, pi[k - 1]);
  p.k = k;
  std::vector<char> taken(n, 0);
  for (int j = 0; j + 1 < k; ++j) {
    for (int v = 0; v < n; ++v) {
      if (!taken[v] && qualifies(x(v, pi[j]), theta)) {
        taken[v] = 1;
        p.label[v] = pi[j];
      }
    }
  }
  return p;
}

RoundingOutcome ckr_round(const ProblemInstance& inst, const FractionalAllocation& x, Rng& rng,
                          bool trace) {
  inst.require_feasible(x);
  RoundingOutcome out;
  const std::vector<int> pi = rng.permutation(inst.k());
  const double theta = rng.next_unit();
  const int n = inst.n(), k = inst.k();
  out.partition.label.assign(n, pi[k - 1]);
  out.partition.k = k;
  std::vector<char> taken(n, 0);
  for (int j = 0; j + 1 < k; ++j) {
    std::vector<int> members;
    for (int v = 0; v < n; ++v) {
      if (!taken[v] && qualifies(x(v, pi[j]), theta)) {
        taken[v] = 1;
        out.partition.label[v] = pi[j];
        members.push_back(v);
      }
    }
    add_trace(out, trace, {"threshold", pi[j], theta, pi, members, ""});
  }
  out.rounds = 1;
  repair_forbidden(inst, x, out, trace);
  finish(inst, out);
  return out;
}

RoundingOutcome half_round(const ProblemInstance& inst, const FractionalAllocation& x, Rng& rng,
                           bool trace) {
  inst.require_feasible(x);
  const double theta = 0.5 + 0.5 * rng.next_unit_open_low();
  RoundingOutcome out;
  out.partition = threshold_sweep(x, theta);
  out.rounds = 1;
  add_trace(out, trace, {"threshold", -1, theta, {}, {}, "half-open threshold sweep"});
  repair_forbidden(inst, x, out, trace);
  finish(inst, out);
  return out;
}

std::vector<Subset> uncross(const SubmodularOracle& f, std::vector<Subset> sets,
                            std::vector<TraceRecord>* trace) {
  long total = 0;
  for (const Subset& s : sets) total += s.size();
  const long max_steps = total * total + static_cast<long>(sets.size()) * sets.size() + 1;

  for (long step = 0; step < max_steps; ++step) {
    int ci = -1, cj = -1;
    for (std::size_t i = 0; i < sets.size() && ci < 0; ++i) {
      for (std::size_t j = i + 1; j < sets.size(); ++j) {
        if (sets[i].intersects(sets[j])) {
          ci = static_cast<int>(i);
          cj = static_cast<int>(j);
          break;
        }
      }
    }
    if (ci < 0) return sets;
    const Subset j_minus_i = sets[cj].minus(sets[ci]);
    if (f(j_minus_i) <= f(sets[cj])) {
      if (trace != nullptr) {
        trace->push_back({"uncross", cj, std::numeric_limits<double>::quiet_NaN(), {},
                          sets[cj].intersect(sets[ci]).ids(),
                          "shrank set " + std::to_string(cj)});
      }
      sets[cj] = j_minus_i;
    } else {
      if (trace != nullptr) {
        trace->push_back({"uncross", ci, std::numeric_limits<double>::quiet_NaN(), {},
                          sets[ci].intersect(sets[cj]).ids(),
                          "shrank set " + std::to_string(ci)});
      }
      sets[ci] = sets[ci].minus(sets[cj]);
    }
  }
  throw std::runtime_error("uncross: step bound exceeded");
}

RoundingOutcome sym_submp_round(const ProblemInstance& inst, const FractionalAllocation& x,
                                Rng& rng, SymVariant variant, bool trace) {
  if (inst.kind() != ProblemKind::SubMP && inst.kind() != ProblemKind::HypergraphMP &&
      inst.kind() != ProblemKind::HypergraphMC) {
    throw std::invalid_argument("sym_submp_round: needs a shared-cost instance");
  }
  inst.require_feasible(x);
  const int n = inst.n(), k = inst.k();
  const OraclePtr& f = inst.label_oracle(0);

  // The reserved label absorbs whatever the thresholded sets do not claim.
  int reserved = k - 1;
  if (variant == SymVariant::Relabel) {
    double best = -1.0;
    for (int i = 0; i < k; ++i) {
      const double v = lovasz_eval(*f, x.column(i));
      if (v >= best) {
        best = v;
        reserved = i;
      }
    }
  }

  RoundingOutcome out;
  const double theta = rng.next_unit();
  std::vector<Subset> sets;
  std::vector<int> set_label;
  for (int i = 0; i < k; ++i) {
    if (variant == SymVariant::Relabel && i == reserved) continue;
    sets.push_back(theta_round(x, i, theta));
    set_label.push_back(i);
    add_trace(out, trace, {"threshold", i, theta, {}, sets.back().ids(), ""});
  }
  sets = uncross(*f, std::move(sets), trace ? &out.trace : nullptr);

  out.partition.label.assign(n, reserved);
  out.partition.k = k;
  for (std::size_t s = 0; s < sets.size(); ++s) {
    if (set_label[s] == reserved) continue;  // plain variant: last set yields to the remainder
    sets[s].for_each([&](int v) { out.partition.label[v] = set_label[s]; });
  }
  out.rounds = 1;
  add_trace(out, trace, {"remainder", reserved, theta, {}, {},
                         variant == SymVariant::Relabel ? "largest-extension label" : ""});
  repair_forbidden(inst, x, out, trace);
  finish(inst, out);
  return out;
}

RoundingOutcome sym_sublabel_round(const ProblemInstance& inst, const FractionalAllocation& x,
                                   Rng& rng, bool trace) {
  if (inst.kind() != ProblemKind::SubLabel) {
    throw std::invalid_argument("sym_sublabel_round: needs a labeling instance");
  }
  inst.require_feasible(x);
  const int n = inst.n(), k = inst.k();
  const OraclePtr& h = inst.labeling().coupling;

  RoundingOutcome out;
  out.assigned_round.assign(n, -1);
  std::vector<Subset> acc(static_cast<std::size_t>(k), Subset::empty_set(n));
  std::vector<char> covered(n, 0);
  int covered_count = 0;
  const int cap = sampling_cap(n, k);
  while (covered_count < n && out.rounds < cap) {
    const int i = rng.next_below(k);
    const double theta = rng.next_unit();
    ++out.rounds;
    std::vector<int> members;
    for (int v = 0; v < n; ++v) {
      if (inst.is_forbidden(v, i) || !qualifies(x(v, i), theta)) continue;
      acc[i].insert(v);
      members.push_back(v);
      if (!covered[v]) {
        covered[v] = 1;
        out.assigned_round[v] = out.rounds;
        ++covered_count;
      }
    }
    add_trace(out, trace, {"round", i, theta, {}, members, ""});
  }
  if (covered_count < n) {
    out.used_fallback = true;
    for (int v = 0; v < n; ++v) {
      if (covered[v]) continue;
      const int to = fallback_label(inst, x, v);
      acc[to].insert(v);
      out.assigned_round[v] = cap + 1 + v;
      add_trace(out, trace, {"fallback", to, std::numeric_limits<double>::quiet_NaN(), {}, {v},
                             "iteration cap reached"});
    }
  }

  acc = uncross(*h, std::move(acc), trace ? &out.trace : nullptr);
  out.partition.label.assign(n, -1);
  out.partition.k = k;
  for (int i = 0; i < k; ++i) {
    acc[i].for_each([&](int v) { out.partition.label[v] = i; });
  }
  finish(inst, out);
  return out;
}

}  // namespace msca
