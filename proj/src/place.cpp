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

#include "strobs/place.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "strobs/bipartite.hpp"
#include "strobs/digraph.hpp"
#include "strobs/dm.hpp"
#include "strobs/error.hpp"
#include "strobs/verify.hpp"

namespace strobs {
namespace {

void require_shapes(const SparsityPattern& a, const SparsityPattern& b) {
  if (a.rows() != a.cols()) {
    throw InputError("state pattern must be square");
  }
  if (b.rows() != a.rows()) {
    throw InputError("B has " + std::to_string(b.rows()) +
                     " rows, expected " + std::to_string(a.rows()));
  }
}

std::string join_states(const std::vector<int>& states) {
  std::string text;
  for (int s : states) {
    if (!text.empty()) text += ", ";
    text += "x" + std::to_string(s);
  }
  return text;
}

std::vector<std::string> state_input_labels(int n, int q) {
  std::vector<std::string> labels;
  labels.reserve(n + q);
  for (int i = 1; i <= n; ++i) labels.push_back("x" + std::to_string(i));
  for (int j = 1; j <= q; ++j) labels.push_back("u" + std::to_string(j));
  return labels;
}

// Left-perfect matching of the columns of `a` into its rows plus one sensor
// row per listed state.  Exists whenever (a, sensors) is generically
// observable, so failure is an internal error.
Matching observation_matching(const SparsityPattern& a,
                              const std::vector<int>& sensor_states) {
  const int nv = a.cols();
  BipartiteGraph g(nv, nv + static_cast<int>(sensor_states.size()));
  for (const auto& [row, col] : a.entries()) {
    g.add_edge(col - 1, row - 1, /*structural=*/true, /*pencil=*/false);
  }
  int extra = nv;
  for (int s : sensor_states) g.add_edge(s - 1, extra++, true, false);
  std::vector<int> all_lefts(nv);
  std::iota(all_lefts.begin(), all_lefts.end(), 0);
  try {
    return max_matching(g, all_lefts);
  } catch (const InfeasibleError&) {
    throw std::logic_error(
        "observation_matching: no column-perfect matching for an observable "
        "placement");
  }
}

// Lowest unmeasured state column that is matched to the row of an
// out-neighbor of `xi` and may take over its sensor.  Returns 0 when none.
int matched_predecessor(const SparsityPattern& a_hat, int n_states,
                        const Matching& match, const std::set<int>& measured,
                        int xi) {
  int best = 0;
  for (const auto& [row, col] : a_hat.entries()) {
    if (col != xi) continue;
    const int l = match.left_of_right[row - 1];
    if (l < 0 || l >= n_states) continue;  // unmatched row or input column
    const int xl = l + 1;
    if (xl == xi || measured.count(xl)) continue;
    if (best == 0 || xl < best) best = xl;
  }
  return best;
}

}  // namespace

PlacementResult stage1_placement(const SparsityPattern& a,
                                 const SparsityPattern& b) {
  require_shapes(a, b);
  const int n = a.rows();
  const int q = b.cols();
  const StructuredSystem sys =
      StructuredSystem::make(n, q, 0, a, b, SparsityPattern(0, n),
                             SparsityPattern(0, q));
  const BipartiteGraph g = system_bipartite(sys, /*with_pencil_edges=*/false);
  std::vector<int> inputs(q);
  std::iota(inputs.begin(), inputs.end(), n);
  const std::vector<std::string> labels = state_input_labels(n, q);
  const Matching m = max_matching(g, inputs, &labels);
  PlacementResult placement;
  for (int i = 0; i < n; ++i) {
    if (!m.left_matched(i)) placement.add(i + 1, false, SensorStage::kStage1);
  }
  return placement;
}

PlacementResult stage2_greedy(const SparsityPattern& a,
                              const SparsityPattern& b,
                              const PlacementResult& base) {
  require_shapes(a, b);
  const int n = a.rows();
  PlacementResult placement = base;
  {
    const BipartiteGraph plain =
        system_bipartite(with_placement(a, b, placement), false);
    const Matching m = max_matching(plain);
    if (m.size < plain.n_left()) {
      throw InputError(
          "placement does not satisfy the rank condition; run phase 1 first");
    }
  }
  for (;;) {
    const BipartiteGraph pencil =
        system_bipartite(with_placement(a, b, placement), true);
    const DmDecomposition dm = dm_decompose(pencil);
    std::vector<int> flagged;
    for (int c = 0; c < static_cast<int>(dm.components.size()); ++c) {
      if (dm.components[c].has_pencil_edge) flagged.push_back(c);
    }
    if (flagged.empty()) break;
    // score[c]: how many flagged blocks a sensor in block c resolves.
    std::vector<int> score(dm.components.size(), 0);
    for (int f : flagged) {
      for (int c : descendant_components(dm, f)) ++score[c];
    }
    int best_state = 0, best = 0;
    for (int i = 1; i <= n; ++i) {
      if (placement.measures_state(i)) continue;
      const int comp = dm.component_of_left[i - 1];
      if (comp < 0) continue;
      if (score[comp] > best) {
        best = score[comp];
        best_state = i;
      }
    }
    if (best_state == 0) {
      throw std::logic_error("stage2_greedy: no state resolves a flagged block");
    }
    placement.add(best_state, false, SensorStage::kStage2);
  }
  return placement;
}

PlacementResult two_stage(const SparsityPattern& a, const SparsityPattern& b) {
  return stage2_greedy(a, b, stage1_placement(a, b));
}

PlacementResult exact_min(const SparsityPattern& a, const SparsityPattern& b,
                          bool allow_input_measure, int max_positions) {
  require_shapes(a, b);
  const int n = a.rows();
  const int q = b.cols();
  std::vector<std::pair<int, bool>> candidates;
  for (int i = 1; i <= n; ++i) candidates.emplace_back(i, false);
  if (allow_input_measure) {
    for (int j = 1; j <= q; ++j) candidates.emplace_back(j, true);
  }
  const int c = static_cast<int>(candidates.size());
  if (c > max_positions) {
    throw InfeasibleError("exact search over " + std::to_string(c) +
                          " sensor positions exceeds the cap of " +
                          std::to_string(max_positions));
  }
  for (int k = 0; k <= c; ++k) {
    std::vector<int> pick(k);
    std::iota(pick.begin(), pick.end(), 0);
    for (;;) {
      PlacementResult placement;
      for (int t : pick) {
        placement.add(candidates[t].first, candidates[t].second,
                      SensorStage::kStage1);
      }
      if (check_gsio_dm(with_placement(a, b, placement)).gsio) {
        return placement;
      }
      int i = k - 1;
      while (i >= 0 && pick[i] == c - k + i) --i;
      if (i < 0) break;
      ++pick[i];
      for (int j = i + 1; j < k; ++j) pick[j] = pick[j - 1] + 1;
    }
  }
  std::string message =
      "no dedicated placement achieves generic state-and-input observability";
  if (!allow_input_measure) {
    message += " (the inputs cannot be covered through B alone; consider "
               "allowing input measurement)";
  }
  throw InfeasibleError(message);
}

MinObsResult min_struct_obs(const SparsityPattern& a,
                            const std::vector<int>& candidates) {
  if (a.rows() != a.cols()) {
    throw InputError("state pattern must be square");
  }
  const int n = a.rows();
  std::vector<bool> is_cand(n + 1, false);
  for (int s : candidates) {
    if (s < 1 || s > n) {
      throw InputError("candidate state x" + std::to_string(s) +
                       " is out of range");
    }
    is_cand[s] = true;
  }

  // Phase 1: maximum column-row matching saturating the sensor-ineligible
  // columns (always possible to keep them saturated if possible at all;
  // otherwise no candidate placement can fix the rank and we must refuse).
  const BipartiteGraph g = pattern_bipartite(a);
  std::vector<int> must;
  std::vector<std::string> labels;
  for (int i = 1; i <= n; ++i) labels.push_back("x" + std::to_string(i));
  for (int i = 1; i <= n; ++i) {
    if (!is_cand[i]) must.push_back(i - 1);
  }
  const Matching m = max_matching(g, must, &labels);
  const int mstar = m.size;

  // Sink components of the state digraph and their candidate columns.
  const SccResult sccs = scc_decompose(pattern_adjacency(a));
  std::vector<std::vector<int>> sink_cands;  // 0-based columns per sink
  std::vector<std::vector<int>> sink_members;
  for (int t = 0; t < static_cast<int>(sccs.components.size()); ++t) {
    if (!sccs.is_sink[t]) continue;
    std::vector<int> cands;
    for (int v : sccs.components[t]) {
      if (is_cand[v + 1]) cands.push_back(v);
    }
    if (cands.empty()) {
      std::vector<int> members;
      for (int v : sccs.components[t]) members.push_back(v + 1);
      throw InfeasibleError("sink component {" + join_states(members) +
                            "} contains no allowed sensor location");
    }
    sink_cands.push_back(std::move(cands));
    sink_members.push_back(sccs.components[t]);
  }
  const int beta = static_cast<int>(sink_cands.size());

  // Phase 2: one virtual sensor row per sink, adjacent to the sink's
  // candidate columns.  Augment from each virtual in turn without ever
  // shrinking the real matching; the number that succeed is the best
  // possible overlap between deficiency sensors and sink coverage.
  const auto cols_of_row = a.cols_by_row();
  std::vector<int> partner_of_col(n, -1);  // row id, or n + sink id
  for (int col = 0; col < n; ++col) partner_of_col[col] = m.right_of_left[col];
  std::vector<bool> visited(n, false);
  const std::function<bool(int)> try_right = [&](int right) -> bool {
    std::vector<int> cols;
    if (right < n) {
      for (int col1 : cols_of_row[right]) cols.push_back(col1 - 1);
    } else {
      cols = sink_cands[right - n];
    }
    for (int col : cols) {
      if (visited[col]) continue;
      visited[col] = true;
      if (partner_of_col[col] < 0 || try_right(partner_of_col[col])) {
        partner_of_col[col] = right;
        return true;
      }
    }
    return false;
  };
  int alpha = 0;
  for (int t = 0; t < beta; ++t) {
    std::fill(visited.begin(), visited.end(), false);
    if (try_right(n + t)) ++alpha;
  }

  MinObsResult result;
  result.deficiency = n - mstar;
  result.sink_count = beta;
  result.covered_sinks = alpha;
  result.h = result.deficiency + beta - alpha;

  std::vector<bool> sink_covered(beta, false);
  for (int col = 0; col < n; ++col) {
    if (partner_of_col[col] < 0) {
      if (!is_cand[col + 1]) {
        throw std::logic_error("min_struct_obs: ineligible column unmatched");
      }
      result.sensor_states.push_back(col + 1);
    } else if (partner_of_col[col] >= n) {
      sink_covered[partner_of_col[col] - n] = true;
      result.sensor_states.push_back(col + 1);
    }
  }
  for (int t = 0; t < beta; ++t) {
    if (!sink_covered[t]) {
      result.sensor_states.push_back(sink_cands[t].front() + 1);
    }
  }
  std::sort(result.sensor_states.begin(), result.sensor_states.end());
  if (static_cast<int>(result.sensor_states.size()) != result.h) {
    throw std::logic_error("min_struct_obs: witness size mismatch");
  }
  if (!check_struct_obs(a, result.sensor_states).observable) {
    throw std::logic_error("min_struct_obs: witness failed verification");
  }
  return result;
}

AuxiliarySystem auxiliary_system(const SparsityPattern& a,
                                 const SparsityPattern& b) {
  require_shapes(a, b);
  if (!is_dedicated(b, Axis::kColumns)) {
    throw InputError(
        "B must be column-dedicated: every input drives exactly one state "
        "and no state is driven twice");
  }
  const int n = a.rows();
  const int q = b.cols();
  AuxiliarySystem aux;
  aux.a_hat = SparsityPattern(n + q, n + q);
  std::vector<bool> is_driven(n + 1, false);
  for (const auto& [row, col] : b.entries()) {
    aux.driven_states.push_back(row);
    is_driven[row] = true;
  }
  std::sort(aux.driven_states.begin(), aux.driven_states.end());
  for (const auto& [row, col] : a.entries()) {
    if (!is_driven[row]) aux.a_hat.insert(row, col);
  }
  for (const auto& [row, col] : b.entries()) {
    aux.a_hat.insert(row, n + col);
  }
  return aux;
}

BoundsResult bounds_dedicated(const SparsityPattern& a,
                              const SparsityPattern& b) {
  const AuxiliarySystem aux = auxiliary_system(a, b);
  const int n = a.rows();
  const int q = b.cols();
  std::vector<int> all_states(n + q);
  std::iota(all_states.begin(), all_states.end(), 1);
  const MinObsResult mo = min_struct_obs(aux.a_hat, all_states);

  BoundsResult result;
  result.lower = mo.h;
  result.upper = std::min(mo.h + q, n);
  result.direct_measure = false;

  std::set<int> measured;
  for (int s : mo.sensor_states) {
    if (s > n) {
      // Input columns are always matched and never lie in a sink, so the
      // minimum witness never measures an adjoined input state.
      throw std::logic_error("bounds_dedicated: sensor on an input vertex");
    }
    measured.insert(s);
  }

  // Move sensors off input-driven states where a matched predecessor can
  // stand in, then dedicate one sensor to every input-driven state that ends
  // up unmeasured.
  const Matching match = observation_matching(aux.a_hat, mo.sensor_states);
  for (int xi : aux.driven_states) {
    if (!measured.count(xi)) continue;
    const int xl = matched_predecessor(aux.a_hat, n, match, measured, xi);
    if (xl != 0) {
      measured.erase(xi);
      measured.insert(xl);
    }
  }
  for (int s : measured) result.witness.add(s, false, SensorStage::kStage1);
  for (int xi : aux.driven_states) {
    if (!measured.count(xi)) {
      result.witness.add(xi, false, SensorStage::kExtra);
    }
  }

  if (result.witness.total() > result.upper) {
    throw std::logic_error("bounds_dedicated: witness exceeds the upper bound");
  }
  if (!check_gsio_dm(with_placement(a, b, result.witness)).gsio) {
    throw std::logic_error("bounds_dedicated: witness failed verification");
  }
  return result;
}

BoundsResult bounds_direct_measure(const SparsityPattern& a,
                                   const SparsityPattern& b) {
  require_shapes(a, b);
  if (!is_dedicated(b, Axis::kColumns)) {
    throw InputError(
        "B must be column-dedicated: every input drives exactly one state "
        "and no state is driven twice");
  }
  const int n = a.rows();
  const int q = b.cols();
  std::vector<int> all_states(n);
  std::iota(all_states.begin(), all_states.end(), 1);
  const MinObsResult mo = min_struct_obs(a, all_states);

  BoundsResult result;
  result.lower = mo.h;
  result.upper = mo.h + q;
  result.direct_measure = true;
  for (int s : mo.sensor_states) {
    result.witness.add(s, false, SensorStage::kStage1);
  }
  for (int j = 1; j <= q; ++j) {
    result.witness.add(j, true, SensorStage::kExtra);
  }
  if (!check_gsio_dm(with_placement(a, b, result.witness)).gsio) {
    throw std::logic_error(
        "bounds_direct_measure: witness failed verification");
  }
  return result;
}

namespace {

void require_polycase_inputs(const SparsityPattern& a,
                             const SparsityPattern& b) {
  require_shapes(a, b);
  std::vector<int> missing;
  for (int i = 1; i <= a.rows(); ++i) {
    if (!a.has(i, i)) missing.push_back(i);
  }
  if (!missing.empty()) {
    throw InputError("every state needs a self-loop; missing: " +
                     join_states(missing));
  }
  if (b.cols() != 1 || b.nnz() != 1) {
    throw InputError(
        "exactly one input driving exactly one state is required");
  }
}

}  // namespace

int l_count(const SparsityPattern& a_hat) {
  if (a_hat.rows() != a_hat.cols() || a_hat.rows() < 1) {
    throw InputError("auxiliary pattern must be square and nonempty");
  }
  const auto adj = pattern_adjacency(a_hat);
  const std::vector<bool> reach = reachable_from(adj, a_hat.rows() - 1);
  const SccResult sccs = scc_decompose(adj);
  int count = 0;
  for (int t = 0; t < static_cast<int>(sccs.components.size()); ++t) {
    if (sccs.is_sink[t] && reach[sccs.components[t].front()]) ++count;
  }
  return count;
}

PlacementResult polycase_selfloop(const SparsityPattern& a,
                                  const SparsityPattern& b) {
  require_polycase_inputs(a, b);
  const AuxiliarySystem aux = auxiliary_system(a, b);
  const int n = a.rows();
  const int reachable_sinks = l_count(aux.a_hat);
  if (reachable_sinks <= 1) {
    throw InputError("the input reaches only " +
                     std::to_string(reachable_sinks) +
                     " sink component(s); this method needs at least 2 "
                     "(use the fallback)");
  }
  const int xstar = aux.driven_states.front();

  std::vector<int> state_cands(n);
  std::iota(state_cands.begin(), state_cands.end(), 1);
  const MinObsResult mo = min_struct_obs(aux.a_hat, state_cands);

  PlacementResult placement;
  for (int s : mo.sensor_states) placement.add(s, false, SensorStage::kStage1);

  // Detect a state that neither lies in every maximum input-output linking
  // nor contributes a disjoint escape path; if one exists, the minimum
  // grows by exactly one dedicated sensor on the driven state.
  const StructuredSystem aux_sys =
      with_placement(aux.a_hat, SparsityPattern(n + 1, 0), placement);
  const SystemDigraph g(aux_sys);
  const std::vector<int> sources{g.state_vertex(n + 1)};
  const std::vector<int> targets = g.output_vertices();
  const int base_rho = rho(g, sources, targets);
  std::vector<bool> essential(n + 1, false);
  for (int v : v_ess(g, sources, targets)) {
    if (v < n) essential[v + 1] = true;
  }
  bool need_extra = false;
  for (int i = 1; i <= n && !need_extra; ++i) {
    if (essential[i]) continue;
    const std::vector<int> sources2{g.state_vertex(n + 1), g.state_vertex(i)};
    if (rho(g, sources2, targets) == base_rho) need_extra = true;
  }

  if (need_extra) {
    if (!placement.measures_state(xstar)) {
      placement.add(xstar, false, SensorStage::kExtra);
    } else {
      // The minimum witness already sits on the driven state; move that
      // sensor to a matched predecessor so the extra sensor can take the
      // driven state (mirrors the bound witness construction).
      std::set<int> measured(mo.sensor_states.begin(), mo.sensor_states.end());
      const Matching match =
          observation_matching(aux.a_hat, mo.sensor_states);
      const int xl = matched_predecessor(aux.a_hat, n, match, measured, xstar);
      if (xl == 0) {
        throw std::logic_error(
            "polycase_selfloop: driven-state sensor cannot be repositioned");
      }
      measured.erase(xstar);
      measured.insert(xl);
      placement = PlacementResult();
      for (int s : measured) placement.add(s, false, SensorStage::kStage1);
      placement.add(xstar, false, SensorStage::kExtra);
    }
  }

  if (!check_gsio_dm(with_placement(a, b, placement)).gsio) {
    throw std::logic_error("polycase_selfloop: result failed verification");
  }
  return placement;
}

PlacementResult polycase_fallback(const SparsityPattern& a,
                                  const SparsityPattern& b) {
  require_polycase_inputs(a, b);
  const AuxiliarySystem aux = auxiliary_system(a, b);
  const int n = a.rows();
  const int reachable_sinks = l_count(aux.a_hat);
  if (reachable_sinks != 1) {
    throw InputError("the fallback expects exactly one input-reachable sink "
                     "component; found " +
                     std::to_string(reachable_sinks));
  }

  const auto adj = pattern_adjacency(aux.a_hat);
  const std::vector<bool> reach = reachable_from(adj, n);
  const SccResult sccs = scc_decompose(adj);
  PlacementResult base;
  for (int t = 0; t < static_cast<int>(sccs.components.size()); ++t) {
    if (!sccs.is_sink[t]) continue;
    if (reach[sccs.components[t].front()]) continue;
    base.add(sccs.components[t].front() + 1, false, SensorStage::kStage1);
  }

  // Complete with the smallest extension; two more sensors always suffice.
  if (check_gsio_dm(with_placement(a, b, base)).gsio) return base;
  for (int i = 1; i <= n; ++i) {
    if (base.measures_state(i)) continue;
    PlacementResult trial = base;
    trial.add(i, false, SensorStage::kStage2);
    if (check_gsio_dm(with_placement(a, b, trial)).gsio) return trial;
  }
  for (int i = 1; i <= n; ++i) {
    if (base.measures_state(i)) continue;
    for (int j = i + 1; j <= n; ++j) {
      if (base.measures_state(j)) continue;
      PlacementResult trial = base;
      trial.add(i, false, SensorStage::kStage2);
      trial.add(j, false, SensorStage::kStage2);
      if (check_gsio_dm(with_placement(a, b, trial)).gsio) return trial;
    }
  }
  throw std::logic_error(
      "polycase_fallback: no completion of size two achieves the property");
}

PlacementResult polycase(const SparsityPattern& a, const SparsityPattern& b) {
  require_polycase_inputs(a, b);
  const AuxiliarySystem aux = auxiliary_system(a, b);
  return l_count(aux.a_hat) > 1 ? polycase_selfloop(a, b)
                                : polycase_fallback(a, b);
}

}  // namespace strobs
