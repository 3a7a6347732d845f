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

#include "strobs/dm.hpp"

#include <algorithm>
#include <queue>
#include <stdexcept>

#include "strobs/digraph.hpp"

namespace strobs {
namespace {

// Breadth-first reachability over an adjacency list, seeding `start`.
std::vector<bool> bfs(const std::vector<std::vector<int>>& adj,
                      const std::vector<int>& start) {
  std::vector<bool> seen(adj.size(), false);
  std::queue<int> queue;
  for (int v : start) {
    if (!seen[v]) {
      seen[v] = true;
      queue.push(v);
    }
  }
  while (!queue.empty()) {
    int v = queue.front();
    queue.pop();
    for (int w : adj[v]) {
      if (!seen[w]) {
        seen[w] = true;
        queue.push(w);
      }
    }
  }
  return seen;
}

}  // namespace

DmDecomposition dm_decompose(const BipartiteGraph& g,
                             const Matching* matching) {
  Matching own;
  if (matching == nullptr) {
    own = max_matching(g);
    matching = &own;
  }
  if (static_cast<int>(matching->right_of_left.size()) != g.n_left() ||
      static_cast<int>(matching->left_of_right.size()) != g.n_right()) {
    throw std::logic_error("dm_decompose: matching does not fit the graph");
  }

  const int nl = g.n_left();
  const int nr = g.n_right();
  // Auxiliary digraph on nl + nr vertices: every edge forward, matching
  // edges also backward.
  std::vector<std::vector<int>> fwd(nl + nr), rev(nl + nr);
  for (const BipartiteEdge& e : g.edges()) {
    fwd[e.left].push_back(nl + e.right);
    rev[nl + e.right].push_back(e.left);
  }
  for (int l = 0; l < nl; ++l) {
    int r = matching->right_of_left[l];
    if (r >= 0) {
      fwd[nl + r].push_back(l);
      rev[l].push_back(nl + r);
    }
  }

  std::vector<int> unmatched_lefts, unmatched_rights;
  for (int l = 0; l < nl; ++l) {
    if (matching->right_of_left[l] < 0) unmatched_lefts.push_back(l);
  }
  for (int r = 0; r < nr; ++r) {
    if (matching->left_of_right[r] < 0) unmatched_rights.push_back(nl + r);
  }

  const std::vector<bool> in_h = bfs(fwd, unmatched_lefts);
  const std::vector<bool> in_v = bfs(rev, unmatched_rights);

  DmDecomposition dm;
  dm.n_left = nl;
  dm.n_right = nr;
  dm.component_of_left.assign(nl, 0);
  dm.component_of_right.assign(nr, 0);

  std::vector<bool> in_middle(nl + nr, false);
  for (int v = 0; v < nl + nr; ++v) {
    if (in_h[v] && in_v[v]) {
      // An alternating path from an unmatched left to an unmatched right
      // would be augmenting, contradicting maximality.
      throw std::logic_error("dm_decompose: matching is not maximum");
    }
    in_middle[v] = !in_h[v] && !in_v[v];
  }
  for (int l = 0; l < nl; ++l) {
    if (in_h[l]) dm.horizontal_lefts.push_back(l);
    if (in_v[l]) dm.vertical_lefts.push_back(l);
  }
  for (int r = 0; r < nr; ++r) {
    if (in_h[nl + r]) dm.horizontal_rights.push_back(r);
    if (in_v[nl + r]) dm.vertical_rights.push_back(r);
  }

  // Strongly connected blocks of the middle.
  std::vector<std::vector<int>> middle_adj(nl + nr);
  for (int v = 0; v < nl + nr; ++v) {
    if (!in_middle[v]) continue;
    for (int w : fwd[v]) {
      if (in_middle[w]) middle_adj[v].push_back(w);
    }
  }
  const SccResult sccs = scc_decompose(middle_adj);

  // Keep only blocks of middle vertices, in discovery order for now.
  std::vector<int> block_of(nl + nr, -1);
  std::vector<DmComponent> blocks;
  for (const std::vector<int>& comp : sccs.components) {
    if (!in_middle[comp.front()]) continue;
    DmComponent block;
    for (int v : comp) {
      if (v < nl) {
        block.lefts.push_back(v);
      } else {
        block.rights.push_back(v - nl);
      }
      block_of[v] = static_cast<int>(blocks.size());
    }
    blocks.push_back(std::move(block));
  }
  const int nb = static_cast<int>(blocks.size());

  // Successor arcs in the auxiliary-digraph direction, deduplicated.
  std::vector<std::vector<int>> succ(nb), pred(nb);
  for (int v = 0; v < nl + nr; ++v) {
    if (!in_middle[v]) continue;
    for (int w : fwd[v]) {
      if (!in_middle[w]) continue;
      int a = block_of[v], b = block_of[w];
      if (a != b) succ[a].push_back(b);
    }
  }
  for (int a = 0; a < nb; ++a) {
    std::sort(succ[a].begin(), succ[a].end());
    succ[a].erase(std::unique(succ[a].begin(), succ[a].end()), succ[a].end());
    for (int b : succ[a]) pred[b].push_back(a);
  }

  // Canonical numbering: emit blocks whose successors are all numbered,
  // smallest left vertex id first.  Every middle block contains a matched
  // pair, so lefts is never empty.
  std::vector<int> remaining(nb);
  std::priority_queue<std::pair<int, int>, std::vector<std::pair<int, int>>,
                      std::greater<>>
      ready;  // (key = smallest left id, block)
  for (int a = 0; a < nb; ++a) {
    if (blocks[a].lefts.empty()) {
      throw std::logic_error("dm_decompose: middle block without left vertex");
    }
    remaining[a] = static_cast<int>(succ[a].size());
    if (remaining[a] == 0) ready.emplace(blocks[a].lefts.front(), a);
  }
  std::vector<int> order;  // canonical position -> old block index
  order.reserve(nb);
  while (!ready.empty()) {
    int a = ready.top().second;
    ready.pop();
    order.push_back(a);
    for (int b : pred[a]) {
      if (--remaining[b] == 0) ready.emplace(blocks[b].lefts.front(), b);
    }
  }
  if (static_cast<int>(order.size()) != nb) {
    throw std::logic_error("dm_decompose: block order is cyclic");
  }
  std::vector<int> new_index(nb);
  for (int pos = 0; pos < nb; ++pos) new_index[order[pos]] = pos;

  dm.components.resize(nb);
  dm.successors.assign(nb, {});
  for (int a = 0; a < nb; ++a) {
    dm.components[new_index[a]] = std::move(blocks[a]);
    for (int b : succ[a]) dm.successors[new_index[a]].push_back(new_index[b]);
  }
  for (auto& s : dm.successors) std::sort(s.begin(), s.end());

  for (int l = 0; l < nl; ++l) {
    dm.component_of_left[l] = in_h[l]        ? DmDecomposition::kHorizontal
                              : in_v[l]      ? DmDecomposition::kVertical
                                             : new_index[block_of[l]];
  }
  for (int r = 0; r < nr; ++r) {
    dm.component_of_right[r] = in_h[nl + r] ? DmDecomposition::kHorizontal
                               : in_v[nl + r]
                                   ? DmDecomposition::kVertical
                                   : new_index[block_of[nl + r]];
  }

  // Flag blocks whose own vertices are joined by a pencil edge.
  for (const BipartiteEdge& e : g.edges()) {
    if (!e.pencil) continue;
    int a = dm.component_of_left[e.left];
    if (a >= 0 && a == dm.component_of_right[e.right]) {
      dm.components[a].has_pencil_edge = true;
    }
  }
  return dm;
}

std::vector<int> descendant_components(const DmDecomposition& dm, int comp) {
  std::vector<bool> seen(dm.components.size(), false);
  std::vector<int> stack{comp}, out;
  seen[comp] = true;
  while (!stack.empty()) {
    int a = stack.back();
    stack.pop_back();
    out.push_back(a);
    for (int b : dm.successors[a]) {
      if (!seen[b]) {
        seen[b] = true;
        stack.push_back(b);
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

SEdgeReport s_edge_report(const DmDecomposition& dm, int n_states) {
  SEdgeReport report;
  for (int a = 0; a < static_cast<int>(dm.components.size()); ++a) {
    if (!dm.components[a].has_pencil_edge) continue;
    report.flagged.push_back(a + 1);
    std::vector<int> states;
    for (int b : descendant_components(dm, a)) {
      for (int l : dm.components[b].lefts) {
        if (l < n_states) states.push_back(l + 1);
      }
    }
    std::sort(states.begin(), states.end());
    report.targets.push_back(std::move(states));
  }
  return report;
}

}  // namespace strobs
