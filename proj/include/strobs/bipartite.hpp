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

#ifndef STROBS_BIPARTITE_HPP_
#define STROBS_BIPARTITE_HPP_

#include <string>
#include <vector>

#include "strobs/pattern.hpp"

namespace strobs {

// One edge of a system bipartite graph.  An edge can be structural (a nonzero
// of [A B; C D]), a pencil edge (the -s on the diagonal of A - sI), or both
// at once when A has that diagonal nonzero; coinciding edges are stored once
// with both flags set so the pencil role survives deduplication.
struct BipartiteEdge {
  int left = 0;   // 0-based left vertex
  int right = 0;  // 0-based right vertex
  bool structural = false;
  bool pencil = false;
};

// A bipartite graph with 0-based vertex ids on each side.
class BipartiteGraph {
 public:
  BipartiteGraph(int n_left, int n_right)
      : n_left_(n_left), n_right_(n_right), adj_(n_left) {}

  // Adds an edge or merges flags into an existing one.
  void add_edge(int left, int right, bool structural, bool pencil);

  int n_left() const { return n_left_; }
  int n_right() const { return n_right_; }
  const std::vector<BipartiteEdge>& edges() const { return edges_; }
  // Edge ids leaving each left vertex, in insertion order.
  const std::vector<int>& adjacent(int left) const { return adj_[left]; }

 private:
  int n_left_;
  int n_right_;
  std::vector<BipartiteEdge> edges_;
  std::vector<std::vector<int>> adj_;
};

// The system bipartite graph.  Left side: x_1..x_n then u_1..u_q.  Right
// side: x_1..x_n then y_1..y_m.  Structural edges follow the nonzeros of
// [A B; C D]; with `with_pencil_edges` every state also gets the diagonal
// pencil edge (x_i left, x_i right).
BipartiteGraph system_bipartite(const StructuredSystem& sys,
                                bool with_pencil_edges);

// Column-to-row bipartite graph of a single square pattern (left j, right i
// iff m(i, j) is nonzero).  Used by observability computations.
BipartiteGraph pattern_bipartite(const SparsityPattern& m);

// A matching; -1 marks unmatched vertices.
struct Matching {
  std::vector<int> right_of_left;
  std::vector<int> left_of_right;
  int size = 0;

  bool left_matched(int l) const { return right_of_left[l] >= 0; }
  bool right_matched(int r) const { return left_of_right[r] >= 0; }
};

// Deterministic maximum matching (augmenting paths, ascending left order).
// Vertices in `must_match` (0-based lefts) are seeded first and are
// guaranteed matched in the result; if that is impossible the function
// throws InfeasibleError naming a violating Hall set.  `label_left` renders
// vertex names in that error (defaults to plain indices).
Matching max_matching(const BipartiteGraph& g,
                      const std::vector<int>& must_match = {},
                      const std::vector<std::string>* left_labels = nullptr);

// Generic (term) rank of a pattern: the maximum matching size between its
// columns and rows.
int generic_rank(const SparsityPattern& m);

}  // namespace strobs

#endif  // STROBS_BIPARTITE_HPP_
