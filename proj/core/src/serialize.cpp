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

#include "msca/serialize.hpp"

#include <stdexcept>

#include "json.hpp"

namespace msca {
namespace {

using nlohmann::json;

std::vector<double> modular_weights(const SubmodularOracle& g) {
  if (g.family() != "modular") {
    throw std::invalid_argument("serialize: only modular cost oracles are expressible");
  }
  std::vector<double> w(g.n());
  for (int v = 0; v < g.n(); ++v) w[v] = g(Subset::singleton(g.n(), v));
  return w;
}

json edges_json(const WeightedHypergraph& h, bool with_reps) {
  json edges = json::array();
  for (const Hyperedge& e : h.edges) {
    json je;
    je["verts"] = e.verts;
    je["w"] = e.weight;
    if (with_reps) {
      if (e.rep < 0) throw std::invalid_argument("serialize: edge missing representative");
      je["rep"] = e.rep;
    }
    edges.push_back(std::move(je));
  }
  return edges;
}

WeightedHypergraph edges_from_json(int n, const json& j, bool expect_reps) {
  WeightedHypergraph h;
  h.n = n;
  for (const json& je : j) {
    Hyperedge e;
    e.verts = je.at("verts").get<std::vector<int>>();
    e.weight = je.at("w").get<double>();
    if (je.contains("rep")) e.rep = je.at("rep").get<int>();
    if (expect_reps && e.rep < 0) {
      throw std::invalid_argument("parse: edge missing representative");
    }
    h.edges.push_back(std::move(e));
  }
  h.validate(expect_reps);
  return h;
}

json costs_json(const std::vector<OraclePtr>& oracles) {
  json rows = json::array();
  for (const OraclePtr& g : oracles) rows.push_back(modular_weights(*g));
  return rows;
}

json forbidden_json(const ProblemInstance& inst) {
  json pairs = json::array();
  for (int v = 0; v < inst.n(); ++v) {
    if (inst.pinned_label(v) >= 0) continue;  // pins travel via "terminals"
    for (int i = 0; i < inst.k(); ++i) {
      if (inst.is_forbidden(v, i)) pairs.push_back(json::array({v, i}));
    }
  }
  return pairs;
}

}  // namespace

std::string serialize_instance(const ProblemInstance& inst) {
  json j;
  j["version"] = "v1";
  j["n"] = inst.n();
  j["k"] = inst.k();
  j["terminals"] = inst.terminals();

  switch (inst.kind()) {
    case ProblemKind::HypergraphMP: {
      const WeightedHypergraph* h = inst.hypergraph();
      bool two_uniform = true;
      for (const Hyperedge& e : h->edges) two_uniform &= e.verts.size() == 2;
      if (inst.cut_scale() == 0.5 && two_uniform) {
        j["type"] = "graph_mc";
      } else if (inst.cut_scale() == 1.0) {
        j["type"] = "hypergraph_mp";
      } else {
        throw std::invalid_argument("serialize: unsupported cut scale");
      }
      j["edges"] = edges_json(*h, /*with_reps=*/false);
      break;
    }
    case ProblemKind::HypergraphMC: {
      j["type"] = "hypergraph_mc";
      j["edges"] = edges_json(*inst.hypergraph(), /*with_reps=*/true);
      break;
    }
    case ProblemKind::SubLabel: {
      const WeightedHypergraph* h = inst.hypergraph();
      if (h == nullptr) {
        throw std::invalid_argument("serialize: labeling coupling lacks an edge structure");
      }
      bool with_reps = !h->edges.empty() && h->edges.front().rep >= 0;
      for (const Hyperedge& e : h->edges) {
        if ((e.rep >= 0) != with_reps) {
          throw std::invalid_argument("serialize: mixed representative usage");
        }
      }
      j["type"] = "sublabel";
      j["edges"] = edges_json(*h, with_reps);
      j["costs"] = costs_json(inst.labeling().assignment);
      j["forbidden"] = forbidden_json(inst);
      break;
    }
    case ProblemKind::Msca: {
      std::vector<OraclePtr> oracles;
      for (int i = 0; i < inst.k(); ++i) oracles.push_back(inst.label_oracle(i));
      j["type"] = "msca";
      j["costs"] = costs_json(oracles);
      break;
    }
    default:
      throw std::invalid_argument("serialize: instance kind has no schema");
  }
  return j.dump();
}

ProblemInstance parse_instance(const std::string& text) {
  json j;
  try {
      j = json::parse(text);
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("parse: ") + e.what());
  }
  try {
    if (j.at("version").get<std::string>() != "v1") {
      throw std::invalid_argument("parse: unknown schema version");
    }
    const std::string type = j.at("type").get<std::string>();
    const int n = j.at("n").get<int>();
    const int k = j.at("k").get<int>();

    if (type == "graph_mc") {
      std::vector<std::tuple<int, int, double>> edges;
      for (const json& je : j.at("edges")) {
        auto verts = je.at("verts").get<std::vector<int>>();
        if (verts.size() != 2) throw std::invalid_argument("parse: graph edge must have 2 vertices");
        edges.emplace_back(verts[0], verts[1], je.at("w").get<double>());
      }
      return ProblemInstance::graph_mc(n, edges, j.at("terminals").get<std::vector<int>>());
    }
    if (type == "hypergraph_mp") {
      return ProblemInstance::hypergraph_mp(edges_from_json(n, j.at("edges"), false),
                                            j.at("terminals").get<std::vector<int>>());
    }
    if (type == "hypergraph_mc") {
      return ProblemInstance::hypergraph_mc(edges_from_json(n, j.at("edges"), true),
                                            j.at("terminals").get<std::vector<int>>());
    }
    if (type == "sublabel") {
      WeightedHypergraph h = edges_from_json(n, j.at("edges"), false);
      bool with_reps = !h.edges.empty() && h.edges.front().rep >= 0;
      LabelingInstance lab;
      for (const json& row : j.at("costs")) {
        lab.assignment.push_back(make_modular(row.get<std::vector<double>>()));
      }
      if (static_cast<int>(lab.assignment.size()) != k) {
        throw std::invalid_argument("parse: cost row count does not match k");
      }
      lab.coupling = with_reps ? make_hypergraph_separation(h) : make_hypergraph_cut(h);
      std::vector<std::pair<int, int>> forbidden;
      if (j.contains("forbidden")) {
        for (const json& p : j.at("forbidden")) {
          forbidden.emplace_back(p.at(0).get<int>(), p.at(1).get<int>());
        }
      }
      return ProblemInstance::sublabel(std::move(lab), std::move(forbidden), std::move(h));
    }
    if (type == "msca") {
      std::vector<OraclePtr> costs;
      for (const json& row : j.at("costs")) {
        costs.push_back(make_modular(row.get<std::vector<double>>()));
      }
      if (static_cast<int>(costs.size()) != k) {
        throw std::invalid_argument("parse: cost row count does not match k");
      }
      return ProblemInstance::msca(std::move(costs));
    }
    throw std::invalid_argument("parse: unknown instance type " + type);
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("parse: ") + e.what());
  }
}

std::string serialize_allocation(const FractionalAllocation& x, std::uint64_t seed) {
  json j;
  j["version"] = "v1";
  j["n"] = x.n();
  j["k"] = x.k();
  json rows = json::array();
  for (int v = 0; v < x.n(); ++v) rows.push_back(x.row(v));
  j["rows"] = std::move(rows);
  j["seed"] = seed;
  return j.dump();
}

FractionalAllocation parse_allocation(const std::string& text, std::uint64_t* seed) {
  json j;
  try {
      j = json::parse(text);
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("parse: ") + e.what());
  }
  try {
    if (j.at("version").get<std::string>() != "v1") {
      throw std::invalid_argument("parse: unknown schema version");
    }
    const int n = j.at("n").get<int>();
    const int k = j.at("k").get<int>();
    FractionalAllocation x(n, k);
    const json& rows = j.at("rows");
    if (static_cast<int>(rows.size()) != n) throw std::invalid_argument("parse: row count mismatch");
    for (int v = 0; v < n; ++v) {
      const auto row = rows[v].get<std::vector<double>>();
      if (static_cast<int>(row.size()) != k) throw std::invalid_argument("parse: row size mismatch");
      x.set_row(v, row);
    }
    if (seed != nullptr) *seed = j.value("seed", std::uint64_t{0});
    return x;
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("parse: ") + e.what());
  }
}

std::uint64_t instance_hash(const ProblemInstance& inst) {
  const std::string bytes = serialize_instance(inst);
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

}  // namespace msca
