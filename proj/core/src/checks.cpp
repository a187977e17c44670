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

#include "msca/checks.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <stdexcept>

#include "msca/exact.hpp"
#include "msca/generators.hpp"
#include "msca/lovasz.hpp"
#include "msca/reductions.hpp"
#include "msca/relax.hpp"
#include "msca/rounding.hpp"

namespace msca {
namespace {

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

CheckResult result(std::string id, std::string suite, int criterion, bool pass,
                   std::string details) {
  return CheckResult{std::move(id), std::move(suite), criterion, pass, std::move(details)};
}

double harmonic(int n) {
  double h = 0.0;
  for (int i = 1; i <= n; ++i) h += 1.0 / i;
  return h;
}

std::uint64_t mix(std::uint64_t seed, int salt) {
  return seed * 0x9E3779B97F4A7C15ull + 1000003ull * static_cast<std::uint64_t>(salt);
}

// value <= bound + 3 sigma, with a whisker for exact-zero margins.
bool within_upper(double value, double bound, double sigma) {
  return value <= bound + 3.0 * sigma + 1e-12;
}

double binomial_sigma(double p, int trials) {
  const double q = std::clamp(p, 0.0, 1.0);
  return std::sqrt(q * (1.0 - q) / trials);
}

OraclePtr random_oracle(int n, int family, Rng& rng) {
  switch (family % 7) {
    case 0: {
      std::vector<double> w(n);
      for (double& v : w) v = rng.next_int(0, 6);
      return make_modular(w);
    }
    case 1: {
      std::vector<std::tuple<int, int, double>> edges;
      for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
          if (rng.next_bool(0.5)) edges.emplace_back(u, v, rng.next_int(1, 4));
        }
      }
      return make_graph_cut(n, edges);
    }
    case 2: {
      WeightedHypergraph h;
      h.n = n;
      const int m = rng.next_int(1, 4);
      for (int j = 0; j < m && n >= 2; ++j) {
        const int size = rng.next_int(2, std::min(n, 4));
        auto perm = rng.permutation(n);
        Hyperedge e;
        e.verts.assign(perm.begin(), perm.begin() + size);
        std::sort(e.verts.begin(), e.verts.end());
        e.weight = rng.next_int(1, 3);
        h.edges.push_back(std::move(e));
      }
      return make_hypergraph_cut(h);
    }
    case 3: {
      WeightedHypergraph h;
      h.n = n;
      const int m = rng.next_int(1, 4);
      for (int j = 0; j < m && n >= 2; ++j) {
        const int size = rng.next_int(2, std::min(n, 4));
        auto perm = rng.permutation(n);
        Hyperedge e;
        e.verts.assign(perm.begin(), perm.begin() + size);
        std::sort(e.verts.begin(), e.verts.end());
        e.weight = rng.next_int(1, 3);
        e.rep = e.verts[rng.next_below(size)];
        h.edges.push_back(std::move(e));
      }
      return make_hypergraph_separation(h);
    }
    case 4: {
      std::vector<double> connect(n);
      for (double& v : connect) v = rng.next_int(0, 4);
      return make_facility(rng.next_int(1, 5), connect);
    }
    case 5: {
      const int items = rng.next_int(2, 8);
      std::vector<double> item_w(items);
      for (double& v : item_w) v = rng.next_int(1, 3);
      std::vector<std::vector<int>> covers(n);
      for (int v = 0; v < n; ++v) {
        for (int t = 0; t < items; ++t) {
          if (rng.next_bool(0.4)) covers[v].push_back(t);
        }
      }
      return make_coverage(covers, item_w);
    }
    default: {
      std::vector<double> values(std::size_t{1} << n);
      for (double& v : values) v = 4.0 * rng.next_unit();
      values[0] = 0.0;
      return make_table(n, std::move(values));
    }
  }
}

// Rotating family of linearly-expressible instances.
ProblemInstance lp_instance(int which, std::uint64_t seed) {
  switch (which % 5) {
    case 0:
      return random_graph_mc(4 + which % 4, 2 + which % 2, 0.6, 1, 5, seed);
    case 1:
      return random_hypergraph(5 + which % 3, 2 + which % 2, 3 + which % 3, 2 + which % 3,
                               ProblemKind::HypergraphMP, seed);
    case 2:
      return random_hypergraph(5 + which % 3, 2 + which % 2, 3 + which % 3, 2 + which % 3,
                               ProblemKind::HypergraphMC, seed);
    case 3:
      return random_sublabel(4 + which % 3, 3, 3 + which % 2, 2 + which % 2, which % 2 == 0, seed);
    default:
      return random_modular_msca(4 + which % 3, 3, seed);
  }
}

LpModel build_model(const ProblemInstance& inst) {
  switch (inst.kind()) {
    case ProblemKind::HypergraphMP:
      return build_hmp_lp(inst);
    case ProblemKind::HypergraphMC:
      return build_hmc_lp(inst);
    case ProblemKind::SubLabel:
      return build_sublabel_lp(inst);
    default:
      return build_modular_lp(inst);
  }
}

// ---- criterion 1: the two extension evaluators agree ----------------------

std::vector<CheckResult> c01(std::uint64_t seed) {
  Rng rng(mix(seed, 1));
  double worst = 0.0;
  for (int t = 0; t < 500; ++t) {
    const int n = rng.next_int(1, 10);
    OraclePtr f = random_oracle(n, t, rng);
    std::vector<double> x(n);
    for (double& v : x) v = rng.next_unit();
    worst = std::max(worst, std::abs(lovasz_eval(*f, x) - lovasz_eval_reference(*f, x)));
  }
  return {result("extension-identity", "lemmas", 1, worst <= 1e-9,
                 "max |sorted-prefix - breakpoint-integral| = " + fmt(worst) +
                     " over 500 oracles, tol 1e-9")};
}

// ---- criterion 2: LP objective matches the extension objective ------------

std::vector<CheckResult> c02(std::uint64_t seed) {
  Rng rng(mix(seed, 2));
  double worst = 0.0;
  for (int t = 0; t < 100; ++t) {
    ProblemInstance inst = lp_instance(t, mix(seed, 200 + t));
    LpModel model = build_model(inst);
    FractionalAllocation x = random_feasible_allocation(inst, rng);
    worst = std::max(worst, std::abs(model.objective_at(x) - objective(inst, x)));
  }
  return {result("lp-extension-identity", "lemmas", 2, worst <= 1e-9,
                 "max |LP objective - extension objective| = " + fmt(worst) +
                     " over 100 allocations, tol 1e-9")};
}

// ---- criterion 3: per-label edge spread at most half the total ------------

std::vector<CheckResult> c03(std::uint64_t seed) {
  double worst = 0.0;  // spread(e,i) - total(e)/2, most positive
  int checked = 0;
  for (int t = 0; t < 10; ++t) {
    ProblemInstance inst = lp_instance(t, mix(seed, 300 + t));
    std::vector<FractionalAllocation> produced;
    if (inst.kind() != ProblemKind::Msca) produced.push_back(solve_lp(inst).x);
    produced.push_back(
        solve_subgradient(inst, {.max_iters = 150, .seed = mix(seed, 350 + t)}).x);
    const WeightedHypergraph* h = inst.hypergraph();
    if (h == nullptr) continue;
    for (const FractionalAllocation& x : produced) {
      ++checked;
      for (const Hyperedge& e : h->edges) {
        const double total = edge_spread_total(e, x);
        for (int i = 0; i < inst.k(); ++i) {
          worst = std::max(worst, edge_spread(e, x, i) - total / 2.0);
        }
      }
    }
  }
  return {result("half-spread-bound", "lemmas", 3, worst <= 1e-9,
                 "max spread(e,i) - total(e)/2 = " + fmt(worst) + " over " +
                     std::to_string(checked) + " solver allocations, tol 1e-9")};
}

// ---- criterion 4: threshold level sets average to the extension -----------

std::vector<CheckResult> c04(std::uint64_t seed) {
  std::vector<CheckResult> out;
  const int trials = 20000;
  for (int pair = 0; pair < 4; ++pair) {
    Rng rng(mix(seed, 40 + pair));
    const int n = 5 + pair;
    OraclePtr f = random_oracle(n, pair + 1, rng);
    FractionalAllocation col(n, 1);
    std::vector<double> raw(n);
    for (int v = 0; v < n; ++v) {
      raw[v] = rng.next_unit();
      col.set(v, 0, raw[v]);
    }
    const double want = lovasz_eval(*f, raw);
    Estimate est = estimate(
        [&](Rng& r) { return (*f)(theta_round(col, 0, r.next_unit())); }, trials,
        mix(seed, 45 + pair));
    const double diff = std::abs(est.mean - want);
    out.push_back(result("theta-expectation-" + std::to_string(pair), "bounds", 4,
                         diff <= 3.0 * est.std_error + 1e-12,
                         "|mean - extension| = " + fmt(diff) + ", 3*stderr = " +
                             fmt(3.0 * est.std_error) + " at " + std::to_string(trials) +
                             " trials"));
  }
  return out;
}

// ---- criterion 5: sampled-label rounding hits exact marginals -------------

std::vector<CheckResult> c05(std::uint64_t seed) {
  const int n = 5, k = 3, trials = 20000;
  ProblemInstance inst = random_modular_msca(n, k, mix(seed, 50));
  FractionalAllocation x(n, k);
  const double rows[n][k] = {{0.7, 0.3, 0.0},
                             {0.2, 0.5, 0.3},
                             {1.0, 0.0, 0.0},
                             {1.0 / 3, 1.0 / 3, 1.0 / 3},
                             {0.0, 0.4, 0.6}};
  for (int v = 0; v < n; ++v) {
    for (int i = 0; i < k; ++i) x.set(v, i, rows[v][i]);
  }

  std::vector<std::vector<int>> hits(n, std::vector<int>(k, 0));
  int fallbacks = 0;
  for (int t = 0; t < trials; ++t) {
    Rng r(mix(seed, 55) + static_cast<std::uint64_t>(t));
    RoundingOutcome o = kt_round(inst, x, r);
    fallbacks += o.used_fallback ? 1 : 0;
    for (int v = 0; v < n; ++v) ++hits[v][o.partition.label[v]];
  }
  bool pass = true;
  double worst_z = 0.0;
  for (int v = 0; v < n; ++v) {
    for (int i = 0; i < k; ++i) {
      const double p = static_cast<double>(hits[v][i]) / trials;
      const double sigma = binomial_sigma(x(v, i), trials);
      const double diff = std::abs(p - x(v, i));
      if (diff > 3.0 * sigma + 1e-12) pass = false;
      if (sigma > 0.0) worst_z = std::max(worst_z, diff / sigma);
    }
  }
  return {result("sampled-label-marginals", "bounds", 5, pass,
                 "max |freq - x(v,i)| = " + fmt(worst_z) + " sigmas over 15 cells, " +
                     std::to_string(fallbacks) + " fallback runs")};
}

// ---- criterion 6: edge cut probabilities under half/permutation rounding --

std::vector<CheckResult> c06(std::uint64_t seed) {
  const int trials = 20000;
  bool pass_half = true, pass_perm = true;
  double worst_half = -1.0, worst_perm = -1.0;  // excess over bound, in sigmas
  for (int t = 0; t < 20; ++t) {
    ProblemInstance inst = random_hypergraph(4 + t % 7, 2 + t % 3, 2 + t % 4, 2 + t % 3,
                                             ProblemKind::HypergraphMC, mix(seed, 600 + t));
    Rng xr(mix(seed, 640 + t));
    FractionalAllocation x = random_feasible_allocation(inst, xr);
    const WeightedHypergraph& h = *inst.hypergraph();
    const int m = static_cast<int>(h.edges.size());
    std::vector<int> cut_half(m, 0), cut_perm(m, 0);
    for (int trial = 0; trial < trials; ++trial) {
      Rng r1(mix(seed, 660 + t) + static_cast<std::uint64_t>(trial));
      RoundingOutcome oh = half_round(inst, x, r1);
      Rng r2(mix(seed, 680 + t) + static_cast<std::uint64_t>(trial));
      RoundingOutcome oc = ckr_round(inst, x, r2);
      for (int j = 0; j < m; ++j) {
        if (h.edge_label_count(j, oh.partition.label) > 1) ++cut_half[j];
        if (h.edge_label_count(j, oc.partition.label) > 1) ++cut_perm[j];
      }
    }
    for (int j = 0; j < m; ++j) {
      const double d = edge_rep_gap_total(h.edges[j], x);
      const int sz = static_cast<int>(h.edges[j].verts.size());
      const double b_half = std::min(1.0, 2.0 * d);
      const double b_perm = std::min(1.0, harmonic(sz) * d);
      const double p_half = static_cast<double>(cut_half[j]) / trials;
      const double p_perm = static_cast<double>(cut_perm[j]) / trials;
      const double s_half = binomial_sigma(b_half, trials);
      const double s_perm = binomial_sigma(b_perm, trials);
      if (!within_upper(p_half, b_half, s_half)) pass_half = false;
      if (!within_upper(p_perm, b_perm, s_perm)) pass_perm = false;
      if (s_half > 0.0) worst_half = std::max(worst_half, (p_half - b_half) / s_half);
      if (s_perm > 0.0) worst_perm = std::max(worst_perm, (p_perm - b_perm) / s_perm);
    }
  }
  return {result("halfspace-cut-probability", "bounds", 6, pass_half,
                 "Pr[edge cut] vs 2*d(e): worst excess " + fmt(worst_half) +
                     " sigmas over 20 instances"),
          result("permutation-cut-probability", "bounds", 6, pass_perm,
                 "Pr[edge cut] vs H_{|e|}*d(e): worst excess " + fmt(worst_perm) +
                     " sigmas over 20 instances")};
}

// ---- criterion 7: the staircase edge meets the permutation bound ----------

std::vector<CheckResult> c07(std::uint64_t seed) {
  std::vector<CheckResult> out;
  {
    CkrTightEdge small = gen_ckr_tight_edge(3, 3, 0.1);
    out.push_back(result("staircase-distance", "gap", 7,
                         std::abs(small.edge_distance - 0.1) <= 1e-12,
                         "edge distance = " + fmt(small.edge_distance) + ", want 0.1"));
  }
  // Many labels shrink the 1/k slack in the exact cut probability
  // eps*(H_m - 1/k) toward the H_m * eps target.
  const int labels = 600, m = 3, trials = 20000;
  CkrTightEdge tight = gen_ckr_tight_edge(m, labels, 0.1);
  FractionalAllocation rows(m, labels);
  for (int j = 0; j < m; ++j) {
    for (int i = 0; i < labels; ++i) rows.set(j, i, tight.x(labels + j, i));
  }
  int cut = 0;
  for (int t = 0; t < trials; ++t) {
    Rng r(mix(seed, 70) + static_cast<std::uint64_t>(t));
    Partition p = ckr_partition(rows, r);
    if (p.label[0] != p.label[1] || p.label[1] != p.label[2]) ++cut;
  }
  const double p_hat = static_cast<double>(cut) / trials;
  const double bound = harmonic(m) * tight.edge_distance;
  const double sigma = binomial_sigma(p_hat, trials);
  out.push_back(result("staircase-cut-tightness", "gap", 7,
                       p_hat >= bound - 3.0 * sigma - 1e-12,
                       "Pr[edge cut] = " + fmt(p_hat) + " vs H_3 * d(e) = " + fmt(bound) +
                           " - 3 sigma = " + fmt(bound - 3.0 * sigma)));
  return out;
}

// ---- criterion 8: relabel rounding within (1.5 - 1/k) of the LP -----------

std::vector<CheckResult> c08(std::uint64_t seed) {
  bool pass = true;
  double worst = -100.0;
  const int trials = 3000;
  for (int t = 0; t < 20; ++t) {
    const int k = 2 + t % 3;
    ProblemInstance inst = random_hypergraph(4 + t % 5, k, 3 + t % 4, 2 + t % 3,
                                             ProblemKind::HypergraphMP, mix(seed, 800 + t));
    LpSolveResult lp = solve_lp(inst);
    Estimate est = estimate(
        [&](Rng& r) {
          return sym_submp_round(inst, lp.x, r, SymVariant::Relabel).cost;
        },
        trials, mix(seed, 840 + t));
    const double bound = (1.5 - 1.0 / k) * lp.report.value;
    if (!within_upper(est.mean, bound, est.std_error)) pass = false;
    if (est.std_error > 0.0) worst = std::max(worst, (est.mean - bound) / est.std_error);
  }
  return {result("relabel-approximation", "bounds", 8, pass,
                 "mean cost vs (1.5 - 1/k) * LP: worst excess " + fmt(worst) +
                     " sigmas over 20 instances, " + std::to_string(trials) + " trials each")};
}

// ---- criterion 9: uncrossing postconditions -------------------------------

std::vector<CheckResult> c09(std::uint64_t seed) {
  Rng rng(mix(seed, 9));
  int violations = 0;
  for (int t = 0; t < 1000; ++t) {
    const int n = 2 + t % 7;
    OraclePtr f = random_oracle(n, 1 + t % 2, rng);  // graph or hypergraph cut
    const int k = 2 + t % 3;
    std::vector<Subset> sets;
    std::uint64_t full = (n >= 64) ? ~0ull : ((std::uint64_t{1} << n) - 1);
    for (int i = 0; i < k; ++i) sets.push_back(Subset::from_mask(n, rng.next_u64() & full));

    double before = 0.0;
    Subset old_union = Subset::empty_set(n);
    for (const Subset& s : sets) {
      before += (*f)(s);
      old_union = old_union.unite(s);
    }
    std::vector<Subset> un = uncross(*f, sets);
    double after = 0.0;
    Subset new_union = Subset::empty_set(n);
    bool ok = un.size() == sets.size();
    for (std::size_t i = 0; i < un.size() && ok; ++i) {
      after += (*f)(un[i]);
      new_union = new_union.unite(un[i]);
      ok = ok && un[i].subset_of(sets[i]);
      for (std::size_t j = i + 1; j < un.size(); ++j) ok = ok && !un[i].intersects(un[j]);
    }
    ok = ok && new_union == old_union && after <= before + 1e-9;
    if (!ok) ++violations;
  }
  return {result("uncross-postconditions", "lemmas", 9, violations == 0,
                 std::to_string(violations) + " violations over 1000 random inputs " +
                     "(shrink, disjoint, union, cost)")};
}

// ---- criterion 10: the barred-diagonal worst-case family ------------------

std::vector<CheckResult> c10(std::uint64_t seed) {
  (void)seed;
  GapExample gap = gen_gap_example(5, 3);
  std::vector<CheckResult> out;

  const double opt = exact_optimum(gap.instance).cost;
  out.push_back(result("gap-integral-optimum", "gap", 10,
                       std::abs(opt - gap.claimed_integral_optimum) <= 1e-9,
                       "enumerated optimum " + fmt(opt) + ", closed form " +
                           fmt(gap.claimed_integral_optimum)));

  const double cand = objective(gap.instance, gap.candidate);
  out.push_back(result("gap-candidate-value", "gap", 10,
                       std::abs(cand - gap.claimed_candidate_cost) <=
                           0.01 * gap.claimed_candidate_cost,
                       "candidate relaxation value " + fmt(cand) + ", claimed closed form " +
                           fmt(gap.claimed_candidate_cost)));

  const double solved = solve_lp(gap.instance).report.value;
  out.push_back(result("gap-solver-value", "gap", 10,
                       solved <= gap.claimed_candidate_cost * 1.01,
                       "LP relaxation value " + fmt(solved) + ", claimed ceiling " +
                           fmt(gap.claimed_candidate_cost * 1.01)));

  const double ratio = opt / solved;
  out.push_back(result("gap-observed-ratio", "gap", 10, ratio >= gap.claimed_ratio * 0.99,
                       "integral/fractional ratio " + fmt(ratio) + ", claimed at least " +
                           fmt(gap.claimed_ratio * 0.99)));
  return out;
}

// ---- criterion 11: relaxation <= optimum <= every rounding ----------------

std::vector<CheckResult> c11(std::uint64_t seed) {
  bool pass = true;
  double worst_lp = 1e100, worst_round = 1e100;  // margins, most negative first
  std::string first_bad;
  for (int t = 0; t < 30; ++t) {
    ProblemInstance inst = lp_instance(t, mix(seed, 1100 + t));
    LpSolveResult lp = solve_lp(inst);
    const double opt = exact_optimum(inst).cost;
    worst_lp = std::min(worst_lp, opt - lp.report.value);
    if (lp.report.value > opt + 1e-7) {
      pass = false;
      if (first_bad.empty()) first_bad = "relaxation above optimum on instance " + std::to_string(t);
    }

    Rng rng(mix(seed, 1140 + t));
    std::vector<RoundingOutcome> outs;
    for (const FractionalAllocation& x : {lp.x, inst.uniform_allocation()}) {
      outs.push_back(monotone_greedy(inst, x));
      for (int rep = 0; rep < 3; ++rep) {
        outs.push_back(kt_round(inst, x, rng));
        outs.push_back(ckr_round(inst, x, rng));
        outs.push_back(half_round(inst, x, rng));
      }
      if (inst.kind() == ProblemKind::SubMP || inst.kind() == ProblemKind::HypergraphMP ||
          inst.kind() == ProblemKind::HypergraphMC) {
        outs.push_back(sym_submp_round(inst, x, rng, SymVariant::Plain));
        outs.push_back(sym_submp_round(inst, x, rng, SymVariant::Relabel));
      }
      if (inst.kind() == ProblemKind::SubLabel) {
        outs.push_back(sym_sublabel_round(inst, x, rng));
        outs.push_back(sym_sublabel_round(inst, x, rng));
      }
    }
    for (const RoundingOutcome& o : outs) {
      worst_round = std::min(worst_round, o.cost - opt);
      if (o.cost < opt - 1e-7 || !inst.partition_feasible(o.partition)) {
        pass = false;
        if (first_bad.empty()) first_bad = "rounding below optimum on instance " + std::to_string(t);
      }
    }
  }
  return {result("sandwich", "bounds", 11, pass,
                 first_bad.empty()
                     ? "min(optimum - relaxation) = " + fmt(worst_lp) +
                           ", min(rounding - optimum) = " + fmt(worst_round) +
                           " over 30 instances"
                     : first_bad)};
}

// ---- criterion 12: vertex-weight reduction equivalence + path lengths -----

NodeWeightedGraph random_nwmc(int n, int k, Rng& rng) {
  NodeWeightedGraph g;
  g.n = n;
  g.weight.assign(n, 0.0);
  g.infinite.assign(n, 0);
  auto perm = rng.permutation(n);
  for (int i = 0; i < k; ++i) {
    g.terminals.push_back(perm[i]);
    g.infinite[perm[i]] = 1;
  }
  for (int v = 0; v < n; ++v) {
    if (!g.infinite[v]) g.weight[v] = rng.next_int(1, 6);
  }
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (g.infinite[u] && g.infinite[v]) continue;  // keep terminals independent
      if (rng.next_bool(0.5)) g.edges.emplace_back(u, v);
    }
  }
  return g;
}

std::vector<CheckResult> c12(std::uint64_t seed) {
  bool equiv_pass = true;
  double worst_gap = 0.0;
  std::vector<ProblemInstance> hmc_pool;
  for (int t = 0; t < 12; ++t) {
    hmc_pool.push_back(random_hypergraph(3 + t % 4, 2 + t % 2, 1 + t % 3, 2 + t % 2,
                                         ProblemKind::HypergraphMC, mix(seed, 1200 + t)));
  }
  for (const ProblemInstance& inst : hmc_pool) {
    const double opt_h = exact_optimum(inst).cost;
    NodeWeightedGraph g = hmc_to_nwmc(*inst.hypergraph(), inst.terminals());
    const double opt_g = nwmc_optimum_brute(g);
    HmcReduction red = nwmc_to_hmc(g);
    const double opt_rt =
        exact_optimum(ProblemInstance::hypergraph_mc(red.hypergraph, red.terminals)).cost;
    worst_gap = std::max({worst_gap, std::abs(opt_h - opt_g), std::abs(opt_h - opt_rt)});
    if (std::abs(opt_h - opt_g) > 1e-9 || std::abs(opt_h - opt_rt) > 1e-9) equiv_pass = false;
  }
  Rng grng(mix(seed, 1250));
  for (int t = 0; t < 6; ++t) {
    NodeWeightedGraph g = random_nwmc(3 + t % 4, 2, grng);
    const double opt_g = nwmc_optimum_brute(g);
    HmcReduction red = nwmc_to_hmc(g);
    double opt_h = 0.0;
    if (!red.hypergraph.edges.empty()) {
      opt_h = exact_optimum(ProblemInstance::hypergraph_mc(red.hypergraph, red.terminals)).cost;
    } else if (opt_g != 0.0) {
      equiv_pass = false;
    }
    worst_gap = std::max(worst_gap, std::abs(opt_h - opt_g));
    if (std::abs(opt_h - opt_g) > 1e-9) equiv_pass = false;
  }

  int feasible = 0;
  const int total = 200;
  double worst_value_slack = -1e100;
  Rng xr(mix(seed, 1260));
  for (int t = 0; t < total; ++t) {
    const ProblemInstance& inst = hmc_pool[t % hmc_pool.size()];
    FractionalAllocation x = random_feasible_allocation(inst, xr);
    NodeWeightedGraph g = hmc_to_nwmc(*inst.hypergraph(), inst.terminals());
    DistanceAssignment d = map_x_to_distance(inst, x);
    if (check_distance_feasible(g, d)) ++feasible;
    double mapped = 0.0;
    for (int v = 0; v < g.n; ++v) {
      if (!g.infinite[v]) mapped += d.d[v] * g.weight[v];
    }
    worst_value_slack = std::max(worst_value_slack, mapped - objective(inst, x));
  }
  return {result("reduction-equivalence", "lemmas", 12, equiv_pass,
                 "max optimum disagreement " + fmt(worst_gap) + " across 18 instances"),
          result("mapped-distance-feasible", "lemmas", 12,
                 feasible == total && worst_value_slack <= 1e-9,
                 std::to_string(feasible) + "/" + std::to_string(total) +
                     " mapped allocations path-feasible; mapped cost excess " +
                     fmt(worst_value_slack))};
}

// ---- criterion 13: greedy within H_n of the relaxation value --------------

std::vector<CheckResult> c13(std::uint64_t seed) {
  bool pass = true;
  double worst = -1e100;
  for (int t = 0; t < 20; ++t) {
    const int n = 3 + t % 5;
    ProblemInstance inst = random_monotone_msca(n, 2 + t % 3, mix(seed, 1300 + t));
    SubgradientResult sg =
        solve_subgradient(inst, {.max_iters = 250, .seed = mix(seed, 1340 + t)});
    RoundingOutcome greedy = monotone_greedy(inst, sg.x);
    const double bound = harmonic(n) * sg.report.value;
    worst = std::max(worst, greedy.cost - bound);
    if (greedy.cost > bound + 1e-9) pass = false;
  }
  return {result("greedy-harmonic-bound", "bounds", 13, pass,
                 "max greedy cost - H_n * relaxation value = " + fmt(worst) +
                     " over 20 monotone instances (deterministic)")};
}

// ---- criterion 14: edge split probability under sampled-label rounding ----

std::vector<CheckResult> c14(std::uint64_t seed) {
  const int trials = 20000;
  bool pass = true;
  double worst = -1.0;
  for (int t = 0; t < 10; ++t) {
    ProblemInstance inst =
        random_sublabel(4 + t % 5, 3, 3 + t % 3, 3, /*separation=*/true, mix(seed, 1400 + t));
    Rng xr(mix(seed, 1440 + t));
    FractionalAllocation x = random_feasible_allocation(inst, xr);
    const WeightedHypergraph& h = *inst.hypergraph();
    const int m = static_cast<int>(h.edges.size());
    const int delta = h.max_edge_size();
    std::vector<int> split(m, 0);
    for (int trial = 0; trial < trials; ++trial) {
      Rng r(mix(seed, 1460 + t) + static_cast<std::uint64_t>(trial));
      RoundingOutcome o = kt_round(inst, x, r);
      for (int j = 0; j < m; ++j) {
        const std::vector<int>& verts = h.edges[j].verts;
        const int r0 = o.assigned_round[verts[0]];
        for (int v : verts) {
          if (o.assigned_round[v] != r0) {
            ++split[j];
            break;
          }
        }
      }
    }
    for (int j = 0; j < m; ++j) {
      const double d = edge_rep_gap_total(h.edges[j], x);
      const double bound = std::min(1.0, delta * d);
      const double p = static_cast<double>(split[j]) / trials;
      const double sigma = binomial_sigma(bound, trials);
      if (!within_upper(p, bound, sigma)) pass = false;
      if (sigma > 0.0) worst = std::max(worst, (p - bound) / sigma);
    }
  }
  return {result("split-probability", "bounds", 14, pass,
                 "Pr[edge split] vs max-size * d(e): worst excess " + fmt(worst) +
                     " sigmas over 10 labeling instances")};
}

// ---- supplementary deterministic identities -------------------------------

std::vector<CheckResult> extra_lemmas(std::uint64_t seed) {
  std::vector<CheckResult> out;

  {  // shared-cut objective equals weighted spread totals
    Rng rng(mix(seed, 2001));
    double worst = 0.0;
    for (int t = 0; t < 20; ++t) {
      ProblemInstance inst = random_hypergraph(4 + t % 5, 2 + t % 3, 2 + t % 4, 2 + t % 3,
                                               ProblemKind::HypergraphMP, mix(seed, 2010 + t));
      FractionalAllocation x = random_feasible_allocation(inst, rng);
      double direct = 0.0;
      for (const Hyperedge& e : inst.hypergraph()->edges) {
        direct += e.weight * inst.cut_scale() * edge_spread_total(e, x);
      }
      worst = std::max(worst, std::abs(direct - objective(inst, x)));
    }
    out.push_back(result("spread-objective-identity", "lemmas", 0, worst <= 1e-9,
                         "max |sum w*spread - extension objective| = " + fmt(worst)));
  }

  {  // separation objective equals weighted representative gaps
    Rng rng(mix(seed, 2101));
    double worst = 0.0;
    for (int t = 0; t < 20; ++t) {
      ProblemInstance inst = random_hypergraph(4 + t % 5, 2 + t % 3, 2 + t % 4, 2 + t % 3,
                                               ProblemKind::HypergraphMC, mix(seed, 2110 + t));
      FractionalAllocation x = random_feasible_allocation(inst, rng);
      double direct = 0.0;
      for (const Hyperedge& e : inst.hypergraph()->edges) {
        direct += e.weight * edge_rep_gap_total(e, x);
      }
      worst = std::max(worst, std::abs(direct - objective(inst, x)));
    }
    out.push_back(result("repgap-objective-identity", "lemmas", 0, worst <= 1e-9,
                         "max |sum w*gap - extension objective| = " + fmt(worst)));
  }

  {  // per-vertex interval groups fit inside the representative gap
    Rng rng(mix(seed, 2201));
    double worst_group = 0.0, worst_single = 0.0, worst_sum = 0.0;
    for (int t = 0; t < 200; ++t) {
      ProblemInstance inst = random_hypergraph(4 + t % 5, 2 + t % 3, 1 + t % 3, 2 + t % 3,
                                               ProblemKind::HypergraphMC, mix(seed, 2210 + t));
      FractionalAllocation x = random_feasible_allocation(inst, rng);
      for (const Hyperedge& e : inst.hypergraph()->edges) {
        const double d = edge_rep_gap_total(e, x);
        const int k = inst.k();
        std::vector<double> spread(k), top(k);
        double spread_sum = 0.0;
        for (int i = 0; i < k; ++i) {
          auto [lo, hi] = edge_interval(e, x, i);
          spread[i] = hi - lo;
          top[i] = hi;
          spread_sum += spread[i];
          worst_single = std::max(worst_single, spread[i] - d);
        }
        for (int z : e.verts) {
          double group = 0.0;
          for (int i = 0; i < k; ++i) {
            if (x(z, i) >= top[i] - 1e-12) group += spread[i];
          }
          worst_group = std::max(worst_group, group - d);
        }
        worst_sum = std::max(worst_sum,
                             spread_sum - static_cast<int>(e.verts.size()) * d);
      }
    }
    out.push_back(result("interval-partition-bound", "lemmas", 0, worst_group <= 1e-9,
                         "max over vertices of (their interval group sum - d(e)) = " +
                             fmt(worst_group)));
    out.push_back(result("interval-size-cap", "lemmas", 0, worst_single <= 1e-9,
                         "max spread(e,i) - d(e) = " + fmt(worst_single)));
    out.push_back(result("spread-sum-vs-size", "lemmas", 0, worst_sum <= 1e-9,
                         "max sum_i spread - |e|*d(e) = " + fmt(worst_sum)));
  }

  return out;
}

std::vector<CheckResult> extra_bounds(std::uint64_t seed) {
  // Expected rounds of the sampled-label loop stay within a documented 10x
  // ceiling of the k * ln(n) scale the analysis promises.
  bool pass = true;
  double worst_ratio = 0.0;
  for (int t = 0; t < 10; ++t) {
    ProblemInstance inst = lp_instance(t, mix(seed, 2400 + t));
    FractionalAllocation x = inst.uniform_allocation();
    Estimate est = estimate(
        [&](Rng& r) { return static_cast<double>(kt_round(inst, x, r).rounds); }, 2000,
        mix(seed, 2440 + t));
    const double ceiling = 10.0 * inst.k() * (std::log(inst.n() + 1.0) + 1.0);
    worst_ratio = std::max(worst_ratio, est.mean / ceiling);
    if (est.mean > ceiling) pass = false;
  }
  return {result("sampling-rounds-ceiling", "bounds", 0, pass,
                 "mean rounds / (10 * k * (ln(n+1)+1)) worst " + fmt(worst_ratio) +
                     " over 10 instances")};
}

std::vector<CheckResult> extra_gap(std::uint64_t seed) {
  (void)seed;
  // Two-uniform sanity point of the barred-diagonal family: the closed
  // forms and the toolkit agree there.
  GapExample tri = gen_gap_example(3, 2);
  const double opt = exact_optimum(tri.instance).cost;
  const double cand = objective(tri.instance, tri.candidate);
  const bool pass = std::abs(opt - 2.0) <= 1e-9 && std::abs(cand - 1.5) <= 1e-9;
  return {result("gap-triangle-sanity", "gap", 0, pass,
                 "triangle family: optimum " + fmt(opt) + " (want 2), candidate value " +
                     fmt(cand) + " (want 1.5)")};
}

}  // namespace

std::vector<CheckResult> run_criterion(int number, std::uint64_t seed) {
  switch (number) {
    case 0: {
      std::vector<CheckResult> out = extra_lemmas(seed);
      std::vector<CheckResult> b = extra_bounds(seed);
      std::vector<CheckResult> g = extra_gap(seed);
      out.insert(out.end(), b.begin(), b.end());
      out.insert(out.end(), g.begin(), g.end());
      return out;
    }
    case 1: return c01(seed);
    case 2: return c02(seed);
    case 3: return c03(seed);
    case 4: return c04(seed);
    case 5: return c05(seed);
    case 6: return c06(seed);
    case 7: return c07(seed);
    case 8: return c08(seed);
    case 9: return c09(seed);
    case 10: return c10(seed);
    case 11: return c11(seed);
    case 12: return c12(seed);
    case 13: return c13(seed);
    case 14: return c14(seed);
    default:
      throw std::invalid_argument("run_criterion: number must be 0..14");
  }
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"lemmas", "bounds", "gap", "all"};
  return names;
}

std::vector<CheckResult> run_suite(const std::string& suite, std::uint64_t seed) {
  std::vector<int> criteria;
  if (suite == "all") {
    criteria = {1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 13, 14, 0};
  } else if (suite == "lemmas") {
    criteria = {1, 2, 3, 9, 12, 0};
  } else if (suite == "bounds") {
    criteria = {4, 5, 6, 8, 11, 13, 14, 0};
  } else if (suite == "gap") {
    criteria = {7, 10, 0};
  } else {
    throw std::invalid_argument("run_suite: unknown suite " + suite);
  }
  std::vector<CheckResult> out;
  for (int c : criteria) {
    for (CheckResult& r : run_criterion(c, seed)) {
      if (suite == "all" || r.suite == suite) out.push_back(std::move(r));
    }
  }
  return out;
}

bool all_pass(const std::vector<CheckResult>& results) {
  return std::all_of(results.begin(), results.end(),
                     [](const CheckResult& r) { return r.pass; });
}

}  // namespace msca
