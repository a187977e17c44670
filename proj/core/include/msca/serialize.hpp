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

#ifndef MSCA_SERIALIZE_HPP
#define MSCA_SERIALIZE_HPP

#include <cstdint>
#include <string>

#include "msca/allocation.hpp"
#include "msca/instance.hpp"

namespace msca {

/// Instance JSON, schema version "v1":
///   {"version": "v1", "type": ..., "n": ..., "k": ...,
///    "terminals": [...], "edges": [{"verts": [...], "w": ..., "rep": ...}],
///    "costs": [[...]], "forbidden": [[v, i], ...]}
/// Types: "graph_mc" (2-uniform edges, half-scaled cut), "hypergraph_mp",
/// "hypergraph_mc" (edges carry "rep"), "sublabel" (costs = per-label
/// modular assignment rows; rep presence selects the separation coupling),
/// "msca" (costs only, modular).  Instances whose oracles fall outside
/// these families cannot be expressed; serialize throws invalid_argument.
std::string serialize_instance(const ProblemInstance& inst);
ProblemInstance parse_instance(const std::string& text);

/// Allocation JSON: {"version": "v1", "n": ..., "k": ...,
///                   "rows": [[...k entries...] * n], "seed": ...}.
/// The seed records which random stream produced the allocation.
std::string serialize_allocation(const FractionalAllocation& x, std::uint64_t seed);
FractionalAllocation parse_allocation(const std::string& text, std::uint64_t* seed = nullptr);

/// FNV-1a over the canonical serialization; stable across runs and
/// platforms for serializable instances.
std::uint64_t instance_hash(const ProblemInstance& inst);

}  // namespace msca

#endif  // MSCA_SERIALIZE_HPP
