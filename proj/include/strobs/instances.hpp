// Copyright 2026 The strobs Authors
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

#ifndef STROBS_INSTANCES_HPP_
#define STROBS_INSTANCES_HPP_

#include <cstdint>
#include <string>
#include <vector>

#include "strobs/pattern.hpp"

namespace strobs {

// A set cover instance over the universe {1..p}.  The reduction also uses
// the implicit singleton subsets {1}, ..., {p}, indexed q+1 .. q+p after the
// explicit ones, so an instance is always coverable.
struct SetCoverInstance {
  int universe = 0;                       // p
  std::vector<std::vector<int>> subsets;  // q explicit subsets, each sorted

  int explicit_count() const { return static_cast<int>(subsets.size()); }
};

// JSON round-trip: {"p": int, "subsets": [[elements], ...]}.
SetCoverInstance parse_setcover(const std::string& text);
SetCoverInstance parse_setcover_file(const std::string& path);
std::string serialize_setcover(const SetCoverInstance& inst);

// A square matrix over the roles {zero, free parameter, pencil}: the stars
// are free nonzeros and the pencils carry the indeterminate.
struct RoleMatrix {
  int size = 0;
  std::vector<std::pair<int, int>> stars;    // 1-based, sorted row-major
  std::vector<std::pair<int, int>> pencils;  // 1-based, sorted row-major
};

// Output of the hardness reduction from (extended) set cover to minimal
// sensor placement.  `matrix` is the raw (2p+3q)-square role matrix;
// `permuted` is the same matrix with columns permuted so the pencils land on
// the leading diagonal, which exposes it as the pencil of a structured
// system with 2p+2q states and q dedicated inputs; `system` carries that
// system together with the q pre-placed sensors on states q+1..2q.
// `subset_states`: per subset (explicit then singleton), the states whose
// measurement corresponds to choosing it.
struct ReductionOutput {
  SetCoverInstance instance;
  RoleMatrix matrix;
  RoleMatrix permuted;
  std::vector<int> column_permutation;  // 1-based: new column of old column c
  StructuredSystem system;
  std::vector<std::vector<int>> subset_states;
};

// Builds the reduction.  A minimum dedicated sensor augmentation of
// `system` has size (minimum cover), realized by measuring one state per
// chosen subset.  Validates the instance (elements in range, no duplicates
// inside a subset, nothing empty).
ReductionOutput reduce_setcover(const SetCoverInstance& inst);

// Greedy cover over the explicit and singleton subsets: repeatedly take the
// subset covering the most uncovered elements (ties to the lowest index).
// Returns chosen 1-based subset indices, ascending.
std::vector<int> setcover_greedy(const SetCoverInstance& inst);

// Exact minimum cover by enumeration over all q+p subsets, cardinality
// first, then lexicographic.  Refuses more than `max_subsets` subsets.
std::vector<int> setcover_exact(const SetCoverInstance& inst,
                                int max_subsets = 20);

// Deterministic random structured system: each candidate entry of A (and of
// B unless `dedicated`) appears independently with probability `density`.
// With `dedicated`, B gets one entry per input on distinct random states
// (requires q <= n); otherwise B is resampled until its generic rank is q.
// With `self_loops`, every diagonal entry of A is forced on.  C and D stay
// empty: sensors are what the placement tools are for.
struct GenConfig {
  int n = 0;
  int q = 0;
  double density = 0.0;
  bool dedicated = false;
  bool self_loops = false;
  std::uint64_t seed = 0;
};

StructuredSystem gen_random(const GenConfig& cfg);

}  // namespace strobs

#endif  // STROBS_INSTANCES_HPP_
