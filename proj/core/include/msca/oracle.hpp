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

#ifndef MSCA_ORACLE_HPP
#define MSCA_ORACLE_HPP

#include <memory>
#include <string>
#include <vector>

#include "msca/hypergraph.hpp"
#include "msca/subset.hpp"

namespace msca {

/// Value oracle for a nonnegative set function on {0, ..., n-1}.
///
/// Every built-in family satisfies f(empty) = 0.  A user oracle with
/// f(empty) = c > 0 still works, but shifts every extension value and
/// objective by the constant c.
///
/// `claims_monotone` and `claims_symmetric` are advisory flags declared by
/// the constructor of each family.  Algorithms whose guarantees depend on
/// them verify the claims exhaustively on small ground sets instead of
/// trusting the flags.
class SubmodularOracle {
 public:
  virtual ~SubmodularOracle() = default;

  int n() const { return n_; }
  bool claims_monotone() const { return monotone_; }
  bool claims_symmetric() const { return symmetric_; }
  const std::string& family() const { return family_; }

  double operator()(const Subset& s) const;

 protected:
  SubmodularOracle(int n, bool monotone, bool symmetric, std::string family);

  virtual double eval_impl(const Subset& s) const = 0;

 private:
  int n_;
  bool monotone_;
  bool symmetric_;
  std::string family_;
};

using OraclePtr = std::shared_ptr<const SubmodularOracle>;

/// Evaluates f(s); throws std::invalid_argument on ground-set mismatch.
double eval(const SubmodularOracle& f, const Subset& s);

/// f(S) = sum of weights over S.  Monotone iff weights are nonnegative.
OraclePtr make_modular(const std::vector<double>& weights);

/// f(S) = scale * w(delta(S)) for an undirected edge list.  Symmetric.
OraclePtr make_graph_cut(int n, const std::vector<std::tuple<int, int, double>>& edges,
                         double scale = 1.0);

/// f(S) = scale * total weight of hyperedges with a vertex on both sides
/// of S.  Symmetric cut capacity.
OraclePtr make_hypergraph_cut(const WeightedHypergraph& h, double scale = 1.0);

/// f(S) = total weight of hyperedges whose representative lies in S but
/// which are not fully contained in S.  Asymmetric; requires representatives.
OraclePtr make_hypergraph_separation(const WeightedHypergraph& h);

/// g(S) = f(S + s) on the ground set with s removed.  Ids above s shift
/// down by one.  Note g(empty) = f({s}) may be positive.
OraclePtr contract_terminal(const OraclePtr& f, int s);

/// f = sum of the given oracles (same ground set).
OraclePtr make_sum(const std::vector<OraclePtr>& parts);

/// Facility-style cost: f(empty) = 0, f(S) = open + sum of connect over S
/// otherwise.  Monotone for nonnegative inputs.
OraclePtr make_facility(double open, const std::vector<double>& connect);

/// Weighted coverage: element v covers item set covers[v] out of a universe
/// with the given item weights; f(S) = weight of the union.  Monotone.
OraclePtr make_coverage(const std::vector<std::vector<int>>& covers,
                        const std::vector<double>& item_weights);

/// Explicit table of 2^n values indexed by subset mask (n <= 20).  The
/// advisory flags are taken at face value from the caller.
OraclePtr make_table(int n, std::vector<double> values, bool monotone = false,
                     bool symmetric = false);

/// Exhaustive diminishing-returns check; n <= 14.
bool check_submodular(const SubmodularOracle& f, double tol = 1e-9);
/// Exhaustive monotonicity check; n <= 14.
bool check_monotone(const SubmodularOracle& f, double tol = 1e-9);
/// Exhaustive f(S) == f(V - S) check; n <= 14.
bool check_symmetric(const SubmodularOracle& f, double tol = 1e-9);

}  // namespace msca

#endif  // MSCA_ORACLE_HPP
