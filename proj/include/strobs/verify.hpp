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

#ifndef STROBS_VERIFY_HPP_
#define STROBS_VERIFY_HPP_

#include <cstdint>
#include <optional>
#include <vector>

#include "strobs/pattern.hpp"

namespace strobs {

// Decomposition-route evidence for generic state-and-input observability.
struct DmRouteReport {
  // Condition 1: the decomposition of the plain system bipartite graph has
  // no horizontal tail (every column of [A B; C D] can be matched).
  bool rank_ok = false;
  std::vector<int> deficient_states;  // 1-based unmatched state columns
  std::vector<int> deficient_inputs;  // 1-based unmatched input columns
  // Condition 2: no middle block of the pencil bipartite graph carries an
  // s-edge between its own vertices.
  bool pencil_ok = false;
  std::vector<int> flagged_components;  // 1-based canonical block indices

  bool ok() const { return rank_ok && pencil_ok; }
};

// Digraph-route evidence for the same property.
struct DigraphRouteReport {
  // Condition 1: theta(X u U, X u Y) = n + q.
  int theta_value = 0;
  int theta_required = 0;
  bool rank_ok = false;
  // Condition 2: every state reaches an output.
  std::vector<int> unreached_states;  // 1-based
  bool reach_ok = false;
  // Condition 3: every state whose addition as a source leaves rho(U, Y)
  // unchanged already lies in every maximum U-Y linking.
  std::vector<int> delta0_states;     // 1-based
  std::vector<int> essential_states;  // 1-based states of V_ess(U, Y)
  std::vector<int> violating_states;  // delta0 states outside V_ess
  bool source_ok = false;

  bool ok() const { return rank_ok && reach_ok && source_ok; }
};

struct GsioVerdict {
  bool gsio = false;
  std::optional<DmRouteReport> dm;
  std::optional<DigraphRouteReport> digraph;
};

// Decides generic state-and-input observability by the decomposition route.
GsioVerdict check_gsio_dm(const StructuredSystem& sys);

// Decides the same property by the digraph route.
GsioVerdict check_gsio_digraph(const StructuredSystem& sys);

// Runs both routes and cross-checks; throws std::logic_error if they ever
// disagree (they are provably equivalent, so disagreement is a bug).
GsioVerdict check_gsio_both(const StructuredSystem& sys);

// Generic observability of a plain state pattern under given sensors.
struct StructObsVerdict {
  bool observable = false;
  int theta_value = 0;
  int theta_required = 0;
  bool rank_ok = false;
  std::vector<int> unreached_states;  // 1-based
  bool reach_ok = false;
};

StructObsVerdict check_struct_obs(const SparsityPattern& a,
                                  const SparsityPattern& c);

// Convenience overload: dedicated sensors on the listed 1-based states.
StructObsVerdict check_struct_obs(const SparsityPattern& a,
                                  const std::vector<int>& sensor_states);

// Numeric cross-check of the generic rank: fills the nonzeros of `m` with
// random reals in [1, 2), computes the numeric rank by singular values
// (relative tolerance `tol`), and returns the maximum over `trials` draws.
// Generic rank is almost surely attained by a random fill, so this equals
// generic_rank except with negligible probability.
int numeric_rank_oracle(const SparsityPattern& m, std::uint64_t seed,
                        int trials = 3, double tol = 1e-9);

}  // namespace strobs

#endif  // STROBS_VERIFY_HPP_
