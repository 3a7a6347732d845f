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

#include "strobs/bipartite.hpp"

#include <algorithm>
#include <sstream>

#include "strobs/error.hpp"

namespace strobs {

void BipartiteGraph::add_edge(int left, int right, bool structural,
                              bool pencil) {
  for (int id : adj_[left]) {
    BipartiteEdge& e = edges_[id];
    if (e.right == right) {
      e.structural = e.structural || structural;
      e.pencil = e.pencil || pencil;
      return;
    }
  }
  adj_[left].push_back(static_cast<int>(edges_.size()));
  edges_.push_back(BipartiteEdge{left, right, structural, pencil});
}

BipartiteGraph system_bipartite(const StructuredSystem& sys,
                                bool with_pencil_edges) {
  BipartiteGraph g(sys.n + sys.q, sys.n + sys.m);
  for (const auto& [i, j] : sys.a.entries()) {
    g.add_edge(j - 1, i - 1, /*structural=*/true, /*pencil=*/false);
  }
  for (const auto& [i, j] : sys.b.entries()) {
    g.add_edge(sys.n + j - 1, i - 1, true, false);
  }
  for (const auto& [i, j] : sys.c.entries()) {
    g.add_edge(j - 1, sys.n + i - 1, true, false);
  }
  for (const auto& [i, j] : sys.d.entries()) {
    g.add_edge(sys.n + j - 1, sys.n + i - 1, true, false);
  }
  if (with_pencil_edges) {
    for (int i = 0; i < sys.n; ++i) {
      g.add_edge(i, i, /*structural=*/false, /*pencil=*/true);
    }
  }
  return g;
}

BipartiteGraph pattern_bipartite(const SparsityPattern& m) {
  BipartiteGraph g(m.cols(), m.rows());
  const auto by_col = m.rows_by_column();
  for (int j = 0; j < m.cols(); ++j) {
    for (int i : by_col[j]) g.add_edge(j, i - 1, true, false);
  }
  return g;
}

namespace {

bool augment(const BipartiteGraph& g, int left, std::vector<char>& visited,
             Matching& m) {
  for (int id : g.adjacent(left)) {
    const int right = g.edges()[id].right;
    if (visited[right]) continue;
    visited[right] = 1;
    if (!m.right_matched(right) ||
        augment(g, m.left_of_right[right], visited, m)) {
      m.right_of_left[left] = right;
      m.left_of_right[right] = left;
      return true;
    }
  }
  return false;
}

// Collects the Hall violator reachable from a left vertex that failed to
// match: all lefts reachable by alternating paths, whose joint neighborhood
// is smaller than the set itself.
std::vector<int> hall_set(const BipartiteGraph& g, int failed,
                          const Matching& m) {
  std::vector<char> left_seen(g.n_left(), 0), right_seen(g.n_right(), 0);
  std::vector<int> stack{failed};
  left_seen[failed] = 1;
  while (!stack.empty()) {
    const int l = stack.back();
    stack.pop_back();
    for (int id : g.adjacent(l)) {
      const int r = g.edges()[id].right;
      if (right_seen[r]) continue;
      right_seen[r] = 1;
      const int l2 = m.left_of_right[r];
      if (l2 >= 0 && !left_seen[l2]) {
        left_seen[l2] = 1;
        stack.push_back(l2);
      }
    }
  }
  std::vector<int> out;
  for (int l = 0; l < g.n_left(); ++l) {
    if (left_seen[l]) out.push_back(l);
  }
  return out;
}

}  // namespace

Matching max_matching(const BipartiteGraph& g, const std::vector<int>& must_match,
                      const std::vector<std::string>* left_labels) {
  Matching m;
  m.right_of_left.assign(g.n_left(), -1);
  m.left_of_right.assign(g.n_right(), -1);

  std::vector<char> in_must(g.n_left(), 0);
  std::vector<int> order;
  order.reserve(g.n_left());
  for (int l : must_match) {
    if (l < 0 || l >= g.n_left()) {
      throw InputError("must-match vertex out of range");
    }
    if (!in_must[l]) {
      in_must[l] = 1;
      order.push_back(l);
    }
  }
  std::sort(order.begin(), order.end());
  const std::size_t n_must = order.size();
  for (int l = 0; l < g.n_left(); ++l) {
    if (!in_must[l]) order.push_back(l);
  }

  std::vector<char> visited(g.n_right());
  for (std::size_t k = 0; k < order.size(); ++k) {
    const int l = order[k];
    std::fill(visited.begin(), visited.end(), 0);
    if (augment(g, l, visited, m)) {
      ++m.size;
    } else if (k < n_must) {
      // Augmenting from later vertices never unmatches an already matched
      // one, so a must-match failure here is final: report the Hall set.
      std::ostringstream msg;
      msg << "no matching saturates the required vertices; violating set {";
      const std::vector<int> bad = hall_set(g, l, m);
      for (std::size_t i = 0; i < bad.size(); ++i) {
        if (i > 0) msg << ", ";
        if (left_labels != nullptr) {
          msg << (*left_labels)[bad[i]];
        } else {
          msg << bad[i];
        }
      }
      msg << "} has a smaller joint neighborhood";
      throw InfeasibleError(msg.str());
    }
  }
  return m;
}

int generic_rank(const SparsityPattern& m) {
  return max_matching(pattern_bipartite(m)).size;
}

}  // namespace strobs
