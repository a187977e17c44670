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

// Command-line harness: solve relaxations, run rounding experiments, verify
// the library's bound checks, and compute exact optima on small instances.
//
// Exit codes: 0 success, 1 internal error, 2 usage error, 3 infeasible
// input, 4 instance too large for the requested operation.

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "msca/checks.hpp"
#include "msca/errors.hpp"
#include "msca/exact.hpp"
#include "msca/generators.hpp"
#include "msca/lovasz.hpp"
#include "msca/relax.hpp"
#include "msca/rounding.hpp"
#include "msca/serialize.hpp"

#ifndef MSCA_CLI_VERSION
#define MSCA_CLI_VERSION "0.0.0"
#endif

namespace {

using json = nlohmann::json;
using namespace msca;

constexpr int kExitUsage = 2;
constexpr int kExitInfeasible = 3;
constexpr int kExitTooLarge = 4;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw UsageError("cannot write " + path);
  out << text;
}

std::string hash_hex(std::uint64_t h) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

// Shared report fields: every output embeds these.
json stamp(const ProblemInstance* inst, std::uint64_t seed) {
  json j;
  j["tool_version"] = MSCA_CLI_VERSION;
  j["seed"] = seed;
  if (inst != nullptr) j["instance_hash"] = hash_hex(instance_hash(*inst));
  return j;
}

ProblemInstance load_instance(const std::string& path) {
  return parse_instance(read_file(path));
}

bool lp_expressible(const ProblemInstance& inst) {
  if (inst.kind() == ProblemKind::SubMP) return false;
  if (inst.kind() == ProblemKind::Msca) {
    for (int i = 0; i < inst.k(); ++i) {
      if (inst.label_oracle(i)->family() != "modular") return false;
    }
  }
  return true;
}

// ---- solve ----------------------------------------------------------------

struct SolveArgs {
  std::string in, out, method = "lp";
  double tol = 1e-9;
  int iters = 2000;
  std::uint64_t seed = 0;
};

int cmd_solve(const SolveArgs& a) {
  ProblemInstance inst = load_instance(a.in);
  const auto t0 = std::chrono::steady_clock::now();

  FractionalAllocation x;
  SolverReport report;
  if (a.method == "lp") {
    if (!lp_expressible(inst)) {
      throw UsageError("method lp is not available for this instance kind");
    }
    LpSolveResult r = solve_lp(inst, a.tol);
    x = std::move(r.x);
    report = r.report;
  } else {
    SubgradientResult r =
        solve_subgradient(inst, {.max_iters = a.iters, .tol = a.tol, .seed = a.seed});
    x = std::move(r.x);
    report = r.report;
  }
  const double wall_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();

  json rep = stamp(&inst, a.seed);
  rep["command"] = "solve";
  rep["method"] = a.method;
  rep["objective"] = report.value;
  rep["iterations"] = report.iterations;
  rep["status"] = a.method == "lp" ? "optimal"
                                   : (report.status == SolveStatus::Optimal          ? "optimal"
                                      : report.status == SolveStatus::ToleranceReached ? "tolerance"
                                                                                       : "iteration-limit");
  rep["wall_ms"] = wall_ms;
  if (!a.out.empty()) {
    write_file(a.out, serialize_allocation(x, a.seed));
    rep["allocation_file"] = a.out;
  } else {
    rep["allocation"] = json::parse(serialize_allocation(x, a.seed));
  }
  std::cout << rep.dump() << "\n";
  return 0;
}

// ---- round ----------------------------------------------------------------

struct RoundArgs {
  std::string in, x_path, out, algorithm = "kt", format = "csv";
  int trials = 10000;
  int threads = 0;
  std::uint64_t seed = 0;
};

RoundingOutcome run_algorithm(const ProblemInstance& inst, const FractionalAllocation& x,
                              const std::string& algorithm, Rng& rng) {
  if (algorithm == "kt") return kt_round(inst, x, rng);
  if (algorithm == "ckr") return ckr_round(inst, x, rng);
  if (algorithm == "half") return half_round(inst, x, rng);
  if (algorithm == "greedy") return monotone_greedy(inst, x);
  if (algorithm == "sym") return sym_submp_round(inst, x, rng, SymVariant::Plain);
  if (algorithm == "sym-relabel") return sym_submp_round(inst, x, rng, SymVariant::Relabel);
  if (algorithm == "sublabel") return sym_sublabel_round(inst, x, rng);
  throw UsageError("unknown algorithm " + algorithm);
}

void check_applicable(const ProblemInstance& inst, const std::string& algorithm) {
  const ProblemKind kind = inst.kind();
  if ((algorithm == "sym" || algorithm == "sym-relabel") &&
      kind != ProblemKind::SubMP && kind != ProblemKind::HypergraphMP &&
      kind != ProblemKind::HypergraphMC) {
    throw UsageError("algorithm " + algorithm + " needs a shared symmetric cost instance");
  }
  if (algorithm == "sublabel" && kind != ProblemKind::SubLabel) {
    throw UsageError("algorithm sublabel needs a labeling instance");
  }
}

int cmd_round(const RoundArgs& a) {
  ProblemInstance inst = load_instance(a.in);
  check_applicable(inst, a.algorithm);

  FractionalAllocation x;
  std::string x_source;
  if (!a.x_path.empty()) {
    x = parse_allocation(read_file(a.x_path));
    x_source = a.x_path;
  } else if (lp_expressible(inst)) {
    x = solve_lp(inst).x;
    x_source = "lp";
  } else {
    x = solve_subgradient(inst, {.seed = a.seed}).x;
    x_source = "subgradient";
  }
  inst.require_feasible(x);

  // Deterministic fan-out: trial t always uses Rng(seed + t), results are
  // kept in trial order regardless of scheduling.
  std::vector<double> costs(a.trials);
  std::atomic<int> next{0};
  auto worker = [&]() {
    for (int t = next.fetch_add(1); t < a.trials; t = next.fetch_add(1)) {
      Rng rng(a.seed + static_cast<std::uint64_t>(t));
      costs[t] = run_algorithm(inst, x, a.algorithm, rng).cost;
    }
  };
  int n_threads = a.threads > 0 ? a.threads
                                : static_cast<int>(std::min(8u, std::thread::hardware_concurrency()));
  n_threads = std::max(1, std::min(n_threads, a.trials));
  std::vector<std::thread> pool;
  for (int w = 1; w < n_threads; ++w) pool.emplace_back(worker);
  worker();
  for (std::thread& th : pool) th.join();

  double sum = 0.0, sum_sq = 0.0;
  double lo = costs.empty() ? 0.0 : costs[0], hi = lo;
  for (double c : costs) {
    sum += c;
    sum_sq += c * c;
    lo = std::min(lo, c);
    hi = std::max(hi, c);
  }
  const double mean = sum / a.trials;
  double var = (sum_sq - sum * sum / a.trials) / std::max(1, a.trials - 1);
  const double std_error = std::sqrt(std::max(0.0, var) / a.trials);

  // Ratio baseline: exact optimum when enumerable, else the relaxation value.
  double baseline = std::numeric_limits<double>::quiet_NaN();
  std::string baseline_kind;
  try {
    baseline = exact_optimum(inst).cost;
    baseline_kind = "exact";
  } catch (const TooLargeError&) {
    baseline = objective(inst, x);
    baseline_kind = "fractional";
  }

  json summary = stamp(&inst, a.seed);
  summary["command"] = "round";
  summary["algorithm"] = a.algorithm;
  summary["allocation_source"] = x_source;
  summary["trials"] = a.trials;
  summary["mean"] = mean;
  summary["stderr"] = std_error;
  summary["min"] = lo;
  summary["max"] = hi;
  summary["baseline"] = baseline;
  summary["baseline_kind"] = baseline_kind;
  if (baseline > 0.0) summary["mean_ratio"] = mean / baseline;

  if (a.format == "json") {
    json doc = summary;
    doc["costs"] = costs;
    const std::string text = doc.dump();
    if (!a.out.empty()) {
      write_file(a.out, text + "\n");
    } else {
      std::cout << text << "\n";
    }
    if (!a.out.empty()) std::cout << summary.dump() << "\n";
    return 0;
  }

  std::ostringstream csv;
  csv << "# msca " << MSCA_CLI_VERSION << " seed=" << a.seed
      << " hash=" << hash_hex(instance_hash(inst)) << " algorithm=" << a.algorithm << "\n";
  csv << "trial,cost\n";
  for (int t = 0; t < a.trials; ++t) csv << t << "," << costs[t] << "\n";
  if (!a.out.empty()) {
    write_file(a.out, csv.str());
  } else {
    std::cout << csv.str();
  }
  std::cout << summary.dump() << "\n";
  return 0;
}

// ---- verify ---------------------------------------------------------------

int cmd_verify(const std::string& suite, std::uint64_t seed) {
  const auto& names = suite_names();
  if (std::find(names.begin(), names.end(), suite) == names.end()) {
    throw UsageError("unknown suite " + suite);
  }
  std::vector<CheckResult> results = run_suite(suite, seed);
  for (const CheckResult& r : results) {
    json line;
    line["tool_version"] = MSCA_CLI_VERSION;
    line["seed"] = seed;
    line["suite"] = r.suite;
    line["criterion"] = r.criterion;
    line["id"] = r.id;
    line["pass"] = r.pass;
    line["details"] = r.details;
    std::cout << line.dump() << "\n";
  }
  return all_pass(results) ? 0 : 1;
}

// ---- exact ----------------------------------------------------------------

int cmd_exact(const std::string& in, const std::string& x_path, std::uint64_t seed) {
  ProblemInstance inst = load_instance(in);
  ExactResult r = exact_optimum(inst);

  json rep = stamp(&inst, seed);
  rep["command"] = "exact";
  rep["optimum"] = r.cost;
  rep["partition"] = r.partition.label;
  if (!x_path.empty()) {
    FractionalAllocation x = parse_allocation(read_file(x_path));
    const double frac = objective(inst, x);
    rep["relaxation_value"] = frac;
    rep["sandwich_ok"] = frac <= r.cost + 1e-7;
  }
  std::cout << rep.dump() << "\n";
  return 0;
}

// ---- gen ------------------------------------------------------------------

struct GenArgs {
  std::string family = "graph_mc", out;
  int n = 8, k = 3, m = 6, max_edge = 3, delta = 2;
  double density = 0.5, epsilon = 0.1;
  bool separation = true;
  std::uint64_t seed = 0;
};

int cmd_gen(const GenArgs& a) {
  ProblemInstance inst = [&]() {
    if (a.family == "graph_mc") return random_graph_mc(a.n, a.k, a.density, 1, 10, a.seed);
    if (a.family == "hypergraph_mp") {
      return random_hypergraph(a.n, a.k, a.m, a.max_edge, ProblemKind::HypergraphMP, a.seed);
    }
    if (a.family == "hypergraph_mc") {
      return random_hypergraph(a.n, a.k, a.m, a.max_edge, ProblemKind::HypergraphMC, a.seed);
    }
    if (a.family == "sublabel") {
      return random_sublabel(a.n, a.k, a.m, a.max_edge, a.separation, a.seed);
    }
    if (a.family == "modular") return random_modular_msca(a.n, a.k, a.seed);
    if (a.family == "gap") return gen_gap_example(a.k, a.delta).instance;
    if (a.family == "tight-edge") return gen_ckr_tight_edge(a.m, a.k, a.epsilon).instance;
    throw UsageError("unknown family " + a.family);
  }();
  const std::string text = serialize_instance(inst) + "\n";
  if (!a.out.empty()) {
    write_file(a.out, text);
  } else {
    std::cout << text;
  }
  std::cerr << "instance_hash=" << hash_hex(instance_hash(inst)) << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Submodular-cost allocation toolkit"};
  app.require_subcommand(1);

  SolveArgs solve_args;
  CLI::App* solve = app.add_subcommand("solve", "Solve the continuous relaxation");
  solve->add_option("--in", solve_args.in, "instance JSON file")->required();
  solve->add_option("--method", solve_args.method, "lp or subgradient (default lp)")
      ->check(CLI::IsMember({"lp", "subgradient"}));
  solve->add_option("--out", solve_args.out, "write the allocation JSON here");
  solve->add_option("--tol", solve_args.tol, "solver tolerance");
  solve->add_option("--iters", solve_args.iters, "subgradient iteration cap");
  solve->add_option("--seed", solve_args.seed, "random seed (default 0)");

  RoundArgs round_args;
  CLI::App* round = app.add_subcommand("round", "Run rounding trials");
  round->add_option("--in", round_args.in, "instance JSON file")->required();
  round->add_option("--x", round_args.x_path, "allocation JSON (default: solve first)");
  round->add_option("--algorithm", round_args.algorithm,
                    "kt | ckr | half | greedy | sym | sym-relabel | sublabel")
      ->check(CLI::IsMember({"kt", "ckr", "half", "greedy", "sym", "sym-relabel", "sublabel"}));
  round->add_option("--trials", round_args.trials, "trial count (default 10000)")
      ->check(CLI::PositiveNumber);
  round->add_option("--seed", round_args.seed, "random seed (default 0)");
  round->add_option("--out", round_args.out, "write per-trial output here");
  round->add_option("--format", round_args.format, "csv or json (default csv)")
      ->check(CLI::IsMember({"csv", "json"}));
  round->add_option("--threads", round_args.threads, "worker threads (default: auto)");

  std::string verify_suite = "all";
  std::uint64_t verify_seed = 0;
  CLI::App* verify = app.add_subcommand("verify", "Run a verification suite");
  verify->add_option("--suite", verify_suite, "lemmas | bounds | gap | all");
  verify->add_option("--seed", verify_seed, "random seed (default 0)");

  std::string exact_in, exact_x;
  std::uint64_t exact_seed = 0;
  CLI::App* exact = app.add_subcommand("exact", "Enumerate the exact optimum");
  exact->add_option("--in", exact_in, "instance JSON file")->required();
  exact->add_option("--x", exact_x, "allocation JSON to sandwich against");
  exact->add_option("--seed", exact_seed, "random seed (default 0)");

  GenArgs gen_args;
  CLI::App* gen = app.add_subcommand("gen", "Generate an instance file");
  gen->add_option("--family", gen_args.family,
                  "graph_mc | hypergraph_mp | hypergraph_mc | sublabel | modular | gap | tight-edge");
  gen->add_option("--n", gen_args.n, "element count");
  gen->add_option("--k", gen_args.k, "label count");
  gen->add_option("--m", gen_args.m, "edge count (or edge size for tight-edge)");
  gen->add_option("--max-edge", gen_args.max_edge, "max edge size");
  gen->add_option("--delta", gen_args.delta, "edge size for the gap family");
  gen->add_option("--density", gen_args.density, "edge density for graph_mc");
  gen->add_option("--epsilon", gen_args.epsilon, "step for tight-edge");
  gen->add_flag("--separation,!--cut", gen_args.separation,
                "coupling style for sublabel (default separation)");
  gen->add_option("--seed", gen_args.seed, "random seed (default 0)");
  gen->add_option("--out", gen_args.out, "write the instance JSON here");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (solve->parsed()) return cmd_solve(solve_args);
    if (round->parsed()) return cmd_round(round_args);
    if (verify->parsed()) return cmd_verify(verify_suite, verify_seed);
    if (exact->parsed()) return cmd_exact(exact_in, exact_x, exact_seed);
    if (gen->parsed()) return cmd_gen(gen_args);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const InfeasibleError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInfeasible;
  } catch (const TooLargeError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitTooLarge;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return kExitUsage;
}
