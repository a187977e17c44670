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

#ifndef MSCA_ERRORS_HPP
#define MSCA_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace msca {

/// Input is structurally valid but violates a feasibility requirement
/// (row sums, terminal pins, forbidden assignments, LP constraints).
class InfeasibleError : public std::runtime_error {
 public:
  explicit InfeasibleError(const std::string& what) : std::runtime_error(what) {}
};

/// Requested exhaustive computation exceeds the configured enumeration budget.
class TooLargeError : public std::runtime_error {
 public:
  explicit TooLargeError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace msca

#endif  // MSCA_ERRORS_HPP
