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

#ifndef STROBS_PLACE_HPP_
#define STROBS_PLACE_HPP_

#include <vector>

#include "strobs/pattern.hpp"

namespace strobs {

// ---------------------------------------------------------------------------
// Two-phase heuristic for dedicated state sensors.

// Phase 1: a smallest sensor set restoring the column rank condition.  Finds
// a maximum matching of the (A, B) bipartite graph that saturates all input
// columns and places one sensor on every unmatched state column.  The number
// of sensors equals the column deficiency of [A B], so the phase is optimal
// in isolation.  Throws InfeasibleError when the input columns themselves
// cannot all be matched (B has generic rank below q).
PlacementResult stage1_placement(const SparsityPattern& a,
                                 const SparsityPattern& b);

// Phase 2: starting from a placement that already satisfies the rank
// condition, greedily adds sensors until no middle block of the pencil
// decomposition carries an s-edge.  Each round scores every unmeasured state
// by how many flagged blocks its measurement resolves and takes a best one
// (ties to the lowest index).  Returns the combined placement; added sensors
// are tagged kStage2.  Throws InputError if `base` violates the rank
// condition.
PlacementResult stage2_greedy(const SparsityPattern& a,
                              const SparsityPattern& b,
                              const PlacementResult& base);

// Both phases in sequence.
PlacementResult two_stage(const SparsityPattern& a, const SparsityPattern& b);

// ---------------------------------------------------------------------------
// Exact minimum by enumeration (exponential; the decision problem is
// NP-hard, so no polynomial exact method is expected).

// Smallest dedicated placement achieving generic state-and-input
// observability, enumerating candidate sets by cardinality and then
// lexicographically.  Candidates are all states, plus all inputs when
// `allow_input_measure` is set.  Refuses instances with more than
// `max_positions` candidate positions.
PlacementResult exact_min(const SparsityPattern& a, const SparsityPattern& b,
                          bool allow_input_measure = false,
                          int max_positions = 16);

// ---------------------------------------------------------------------------
// Minimum sensors for plain generic observability of a state pattern
// (polynomial; used by the bounds and by the all-self-loop special case).

struct MinObsResult {
  int h = 0;                       // minimum number of sensors
  std::vector<int> sensor_states;  // a witness, ascending 1-based
  int deficiency = 0;              // columns left unmatched at best
  int sink_count = 0;              // sink components of the state digraph
  int covered_sinks = 0;           // sinks a deficiency sensor already covers
};

// Minimum dedicated sensors making `a` generically observable, with sensors
// restricted to `candidates` (1-based states; pass all states for the
// unrestricted problem).  h = deficiency + (sinks - covered).  Throws
// InfeasibleError when no candidate placement works: a sink component with
// no candidate state, or non-candidate columns that cannot all be matched.
MinObsResult min_struct_obs(const SparsityPattern& a,
                            const std::vector<int>& candidates);

// ---------------------------------------------------------------------------
// Bounds via the auxiliary pattern.

// The auxiliary pattern adjoins each input as an extra state (state n + j
// for input j) and deletes every edge into an input-driven state except the
// input edges themselves.  Requires a column-dedicated B; `driven_states`
// lists the states receiving an input, ascending.
struct AuxiliarySystem {
  SparsityPattern a_hat;          // (n+q) x (n+q)
  std::vector<int> driven_states; // 1-based, ascending
};

AuxiliarySystem auxiliary_system(const SparsityPattern& a,
                                 const SparsityPattern& b);

struct BoundsResult {
  int lower = 0;
  int upper = 0;
  PlacementResult witness;  // achieves the property within [lower, upper]
  bool direct_measure = false;
};

// Bounds on the minimum dedicated state-sensor count for generic
// state-and-input observability: lower = h of the auxiliary pattern, upper =
// min(lower + q, n).  The witness takes a minimum auxiliary placement,
// repositions sensors sitting on input-driven states onto matched
// predecessors where possible, and adds one sensor per still-unmeasured
// input-driven state (tagged kExtra).  Requires a column-dedicated B.
BoundsResult bounds_dedicated(const SparsityPattern& a,
                              const SparsityPattern& b);

// Bounds when inputs may be measured directly: lower = h of the plain state
// pattern, upper = lower + q.  The witness is a minimum observability
// placement plus one sensor per input (tagged kExtra).  Requires a
// column-dedicated B.
BoundsResult bounds_direct_measure(const SparsityPattern& a,
                                   const SparsityPattern& b);

// ---------------------------------------------------------------------------
// Polynomial special case: every state has a self-loop and the single input
// is dedicated.

// Number of sink components of the auxiliary digraph reachable from the
// adjoined input vertex.
int l_count(const SparsityPattern& a_hat);

// Optimal placement when l_count > 1: a minimum auxiliary observability
// placement, plus one sensor on the driven state exactly when some state
// neither lies in every maximum input-output linking nor admits a disjoint
// escape path (tagged kExtra).  Throws InputError when a precondition fails
// (missing self-loops, input not single and dedicated, or l_count <= 1).
PlacementResult polycase_selfloop(const SparsityPattern& a,
                                  const SparsityPattern& b);

// Optimal placement when l_count == 1: one sensor per input-unreachable sink
// of the auxiliary digraph (tagged kStage1), completed by the smallest
// extension — at most two more sensors — that achieves the property (tagged
// kStage2).  Throws InputError when a precondition fails.
PlacementResult polycase_fallback(const SparsityPattern& a,
                                  const SparsityPattern& b);

// Dispatches on l_count.
PlacementResult polycase(const SparsityPattern& a, const SparsityPattern& b);

}  // namespace strobs

#endif  // STROBS_PLACE_HPP_
