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

// Runs the library's self-verification checks and prints one line per
// sub-result.  Exit status is 0 iff everything passed.
//
//   msca_acceptance                   run every check
//   msca_acceptance --criterion N     run check group N (0..14)
//   msca_acceptance --seed S          reseed the randomized checks

#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <string>
#include <vector>

#include "msca/checks.hpp"

int main(int argc, char** argv) {
  int criterion = -1;
  std::uint64_t seed = 0;
  for (int a = 1; a < argc; ++a) {
    const std::string arg = argv[a];
    if (arg == "--criterion" && a + 1 < argc) {
      criterion = std::atoi(argv[++a]);
    } else if (arg == "--seed" && a + 1 < argc) {
      seed = std::strtoull(argv[++a], nullptr, 10);
    } else {
      std::fprintf(stderr, "usage: %s [--criterion N] [--seed S]\n", argv[0]);
      return 2;
    }
  }

  std::vector<msca::CheckResult> results;
  try {
    if (criterion >= 0) {
      results = msca::run_criterion(criterion, seed);
    } else {
      results = msca::run_suite("all", seed);
    }
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  }

  int failed = 0;
  for (const msca::CheckResult& r : results) {
    if (!r.pass) ++failed;
    std::printf("[%s] c%02d %-28s %s\n", r.pass ? "PASS" : "FAIL", r.criterion,
                r.id.c_str(), r.details.c_str());
  }
  std::printf("%d/%d checks passed\n", static_cast<int>(results.size()) - failed,
              static_cast<int>(results.size()));
  return failed == 0 ? 0 : 1;
}
