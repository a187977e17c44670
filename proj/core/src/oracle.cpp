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

#include "msca/oracle.hpp"

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <tuple>
#include <utility>

namespace msca {

SubmodularOracle::SubmodularOracle(int n, bool monotone, bool symmetric, std::string family)
    : n_(n), monotone_(monotone), symmetric_(symmetric), family_(std::move(family)) {
  if (n < 0) throw std::invalid_argument("oracle: negative ground size");
}

double SubmodularOracle::operator()(const Subset& s) const {
  if (s.ground_size() != n_) {
    throw std::invalid_argument("oracle: subset ground size mismatch");
  }
  return eval_impl(s);
}

double eval(const SubmodularOracle& f, const Subset& s) { return f(s); }

namespace {

class ModularOracle final : public SubmodularOracle {
 public:
  explicit ModularOracle(std::vector<double> w)
      : SubmodularOracle(static_cast<int>(w.size()),
                         std::all_of(w.begin(), w.end(), [](double x) { return x >= 0; }),
                         std::all_of(w.begin(), w.end(), [](double x) { return x == 0; }),
                         "modular"),
        w_(std::move(w)) {}

  double eval_impl(const Subset& s) const override {
    double total = 0;
    s.for_each([&](int v) { total += w_[v]; });
    return total;
  }

 private:
  std::vector<double> w_;
};

class GraphCutOracle final : public SubmodularOracle {
 public:
  GraphCutOracle(int n, std::vector<std::tuple<int, int, double>> edges, double scale)
      : SubmodularOracle(n, edges.empty(), true, "graph_cut"),
        edges_(std::move(edges)),
        scale_(scale) {
    for (const auto& [u, v, w] : edges_) {
      if (u < 0 || u >= n || v < 0 || v >= n) {
        throw std::invalid_argument("graph_cut: endpoint out of range");
      }
      if (u == v) throw std::invalid_argument("graph_cut: self loop");
      if (w < 0) throw std::invalid_argument("graph_cut: negative weight");
    }
  }

  double eval_impl(const Subset& s) const override {
    double total = 0;
    for (const auto& [u, v, w] : edges_) {
      if (s.contains(u) != s.contains(v)) total += w;
    }
    return scale_ * total;
  }

 private:
  std::vector<std::tuple<int, int, double>> edges_;
  double scale_;
};

class HypergraphCutOracle final : public SubmodularOracle {
 public:
  HypergraphCutOracle(WeightedHypergraph h, double scale)
      : SubmodularOracle(h.n, h.edges.empty(), true, "hypergraph_cut"),
        h_(std::move(h)),
        scale_(scale) {
    h_.validate();
  }

  double eval_impl(const Subset& s) const override {
    double total = 0;
    for (const Hyperedge& e : h_.edges) {
      bool any_in = false;
      bool any_out = false;
      for (int v : e.verts) (s.contains(v) ? any_in : any_out) = true;
      if (any_in && any_out) total += e.weight;
    }
    return scale_ * total;
  }

 private:
  WeightedHypergraph h_;
  double scale_;
};

class HypergraphSeparationOracle final : public SubmodularOracle {
 public:
  explicit HypergraphSeparationOracle(WeightedHypergraph h)
      : SubmodularOracle(h.n, false, h.edges.empty(), "hypergraph_separation"),
        h_(std::move(h)) {
    h_.validate(/*require_reps=*/true);
  }

  double eval_impl(const Subset& s) const override {
    double total = 0;
    for (const Hyperedge& e : h_.edges) {
      if (!s.contains(e.rep)) continue;
      bool any_out = false;
      for (int v : e.verts) {
        if (!s.contains(v)) {
          any_out = true;
          break;
        }
      }
      if (any_out) total += e.weight;
    }
    return total;
  }

 private:
  WeightedHypergraph h_;
};

class ContractedOracle final : public SubmodularOracle {
 public:
  ContractedOracle(OraclePtr f, int s)
      : SubmodularOracle(f->n() - 1, f->claims_monotone(), false, "contracted"),
        f_(std::move(f)),
        s_(s) {}

  double eval_impl(const Subset& sub) const override {
    Subset lifted(f_->n());
    sub.for_each([&](int v) { lifted.insert(v < s_ ? v : v + 1); });
    lifted.insert(s_);
    return (*f_)(lifted);
  }

 private:
  OraclePtr f_;
  int s_;
};

class SumOracle final : public SubmodularOracle {
 public:
  explicit SumOracle(std::vector<OraclePtr> parts)
      : SubmodularOracle(parts.empty() ? 0 : parts.front()->n(),
                         std::all_of(parts.begin(), parts.end(),
                                     [](const OraclePtr& p) { return p->claims_monotone(); }),
                         std::all_of(parts.begin(), parts.end(),
                                     [](const OraclePtr& p) { return p->claims_symmetric(); }),
                         "sum"),
        parts_(std::move(parts)) {
    for (const OraclePtr& p : parts_) {
      if (p->n() != n()) throw std::invalid_argument("sum oracle: mismatched ground sets");
    }
  }

  double eval_impl(const Subset& s) const override {
    double total = 0;
    for (const OraclePtr& p : parts_) total += (*p)(s);
    return total;
  }

 private:
  std::vector<OraclePtr> parts_;
};

class FacilityOracle final : public SubmodularOracle {
 public:
  FacilityOracle(double open, std::vector<double> connect)
      : SubmodularOracle(static_cast<int>(connect.size()), true, false, "facility"),
        open_(open),
        connect_(std::move(connect)) {
    if (open < 0) throw std::invalid_argument("facility: negative opening cost");
    for (double c : connect_) {
      if (c < 0) throw std::invalid_argument("facility: negative connection cost");
    }
  }

  double eval_impl(const Subset& s) const override {
    if (s.empty()) return 0;
    double total = open_;
    s.for_each([&](int v) { total += connect_[v]; });
    return total;
  }

 private:
  double open_;
  std::vector<double> connect_;
};

class CoverageOracle final : public SubmodularOracle {
 public:
  CoverageOracle(std::vector<std::vector<int>> covers, std::vector<double> item_weights)
      : SubmodularOracle(static_cast<int>(covers.size()), true, false, "coverage"),
        item_weights_(std::move(item_weights)) {
    if (item_weights_.size() > 64) throw std::invalid_argument("coverage: more than 64 items");
    masks_.reserve(covers.size());
    for (const auto& items : covers) {
      std::uint64_t m = 0;
      for (int item : items) {
        if (item < 0 || item >= static_cast<int>(item_weights_.size())) {
          throw std::invalid_argument("coverage: item out of range");
        }
        m |= std::uint64_t{1} << item;
      }
      masks_.push_back(m);
    }
    for (double w : item_weights_) {
      if (w < 0) throw std::invalid_argument("coverage: negative item weight");
    }
  }

  double eval_impl(const Subset& s) const override {
    std::uint64_t covered = 0;
    s.for_each([&](int v) { covered |= masks_[v]; });
    double total = 0;
    while (covered != 0) {
      int item = __builtin_ctzll(covered);
      total += item_weights_[item];
      covered &= covered - 1;
    }
    return total;
  }

 private:
  std::vector<std::uint64_t> masks_;
  std::vector<double> item_weights_;
};

class TableOracle final : public SubmodularOracle {
 public:
  TableOracle(int n, std::vector<double> values, bool monotone, bool symmetric)
      : SubmodularOracle(n, monotone, symmetric, "table"), values_(std::move(values)) {
    if (n > 20) throw std::invalid_argument("table oracle: ground set larger than 20");
    if (values_.size() != (std::size_t{1} << n)) {
      throw std::invalid_argument("table oracle: value table has wrong size");
    }
  }

  double eval_impl(const Subset& s) const override { return values_[s.mask()]; }

 private:
  std::vector<double> values_;
};

void check_enumerable(const SubmodularOracle& f, const char* what) {
  if (f.n() > 14) {
    throw std::invalid_argument(std::string(what) + ": ground set too large for exhaustive check");
  }
}

std::vector<double> tabulate(const SubmodularOracle& f) {
  int n = f.n();
  std::vector<double> table(std::size_t{1} << n);
  for (std::uint64_t m = 0; m < table.size(); ++m) {
    table[m] = f(Subset::from_mask(n, m));
  }
  return table;
}

}  // namespace

OraclePtr make_modular(const std::vector<double>& weights) {
  return std::make_shared<ModularOracle>(weights);
}

OraclePtr make_graph_cut(int n, const std::vector<std::tuple<int, int, double>>& edges,
                         double scale) {
  return std::make_shared<GraphCutOracle>(n, edges, scale);
}

OraclePtr make_hypergraph_cut(const WeightedHypergraph& h, double scale) {
  return std::make_shared<HypergraphCutOracle>(h, scale);
}

OraclePtr make_hypergraph_separation(const WeightedHypergraph& h) {
  return std::make_shared<HypergraphSeparationOracle>(h);
}

OraclePtr contract_terminal(const OraclePtr& f, int s) {
  if (!f) throw std::invalid_argument("contract_terminal: null oracle");
  if (s < 0 || s >= f->n()) throw std::out_of_range("contract_terminal: element out of range");
  if (f->n() == 0) throw std::invalid_argument("contract_terminal: empty ground set");
  return std::make_shared<ContractedOracle>(f, s);
}

OraclePtr make_sum(const std::vector<OraclePtr>& parts) {
  if (parts.empty()) throw std::invalid_argument("sum oracle: no parts");
  return std::make_shared<SumOracle>(parts);
}

OraclePtr make_facility(double open, const std::vector<double>& connect) {
  return std::make_shared<FacilityOracle>(open, connect);
}

OraclePtr make_coverage(const std::vector<std::vector<int>>& covers,
                        const std::vector<double>& item_weights) {
  return std::make_shared<CoverageOracle>(covers, item_weights);
}

OraclePtr make_table(int n, std::vector<double> values, bool monotone, bool symmetric) {
  return std::make_shared<TableOracle>(n, std::move(values), monotone, symmetric);
}

bool check_submodular(const SubmodularOracle& f, double tol) {
  check_enumerable(f, "check_submodular");
  int n = f.n();
  std::vector<double> table = tabulate(f);
  // Diminishing returns: for all A and distinct i, j outside A,
  // f(A+i) - f(A) >= f(A+i+j) - f(A+j).
  for (std::uint64_t a = 0; a < table.size(); ++a) {
    for (int i = 0; i < n; ++i) {
      if ((a >> i) & 1) continue;
      std::uint64_t ai = a | (std::uint64_t{1} << i);
      double gain_small = table[ai] - table[a];
      for (int j = 0; j < n; ++j) {
        if (j == i || ((a >> j) & 1)) continue;
        std::uint64_t aj = a | (std::uint64_t{1} << j);
        if (gain_small + tol < table[ai | aj] - table[aj]) return false;
      }
    }
  }
  return true;
}

bool check_monotone(const SubmodularOracle& f, double tol) {
  check_enumerable(f, "check_monotone");
  int n = f.n();
  std::vector<double> table = tabulate(f);
  for (std::uint64_t a = 0; a < table.size(); ++a) {
    for (int i = 0; i < n; ++i) {
      if ((a >> i) & 1) continue;
      if (table[a | (std::uint64_t{1} << i)] + tol < table[a]) return false;
    }
  }
  return true;
}

bool check_symmetric(const SubmodularOracle& f, double tol) {
  check_enumerable(f, "check_symmetric");
  std::vector<double> table = tabulate(f);
  std::uint64_t full = table.size() - 1;
  for (std::uint64_t a = 0; a < table.size(); ++a) {
    if (std::abs(table[a] - table[full & ~a]) > tol) return false;
  }
  return true;
}

}  // namespace msca
