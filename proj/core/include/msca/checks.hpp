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

#ifndef MSCA_CHECKS_HPP
#define MSCA_CHECKS_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace msca {

/// One verification outcome.  `criterion` numbers the acceptance checks
/// 1..14; supplementary identity checks carry 0.
struct CheckResult {
  std::string id;
  std::string suite;   // "lemmas", "bounds", or "gap"
  int criterion = 0;
  bool pass = false;
  std::string details;
};

/// Runs one acceptance criterion (1..14), or the supplementary identity
/// checks (0).  A criterion may expand into several sub-results; it passes
/// when all of them do.  Deterministic in the seed; tolerances are pinned
/// inside.
std::vector<CheckResult> run_criterion(int number, std::uint64_t seed = 0);

/// Suites: "lemmas" (deterministic identities and structure checks),
/// "bounds" (Monte-Carlo approximation and probability bounds), "gap"
/// (the worst-case constructions), "all".
std::vector<CheckResult> run_suite(const std::string& suite, std::uint64_t seed = 0);

const std::vector<std::string>& suite_names();

bool all_pass(const std::vector<CheckResult>& results);

}  // namespace msca

#endif  // MSCA_CHECKS_HPP
