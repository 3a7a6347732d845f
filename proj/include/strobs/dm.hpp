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

#ifndef STROBS_DM_HPP_
#define STROBS_DM_HPP_

#include <vector>

#include "strobs/bipartite.hpp"

namespace strobs {

// One middle component of a Dulmage-Mendelsohn decomposition.
struct DmComponent {
  std::vector<int> lefts;   // 0-based left vertex ids, ascending
  std::vector<int> rights;  // 0-based right vertex ids, ascending
  bool has_pencil_edge = false;  // an s-edge joins two of its own vertices
};

// Dulmage-Mendelsohn decomposition of a bipartite graph.  The horizontal
// tail collects descendants of unmatched left vertices, the vertical tail
// ancestors of unmatched right vertices (in the auxiliary digraph that
// orients every edge left-to-right and matching edges right-to-left); the
// middle splits into strongly connected blocks.  The partition does not
// depend on which maximum matching is used.
//
// Components are numbered canonically: repeatedly emit the block all of
// whose successors (in the auxiliary-digraph direction) are already
// numbered, breaking ties by the smallest left vertex id.  Block i precedes
// block j in the partial order exactly when j can reach i.
struct DmDecomposition {
  static constexpr int kHorizontal = -1;
  static constexpr int kVertical = -2;

  int n_left = 0;
  int n_right = 0;
  std::vector<int> horizontal_lefts, horizontal_rights;  // ascending
  std::vector<int> vertical_lefts, vertical_rights;      // ascending
  std::vector<DmComponent> components;                   // canonical order
  // Auxiliary-digraph arcs between middle blocks: successors[i] holds every
  // j != i with an arc from block i into block j, ascending.
  std::vector<std::vector<int>> successors;
  // Per-vertex location: component index, kHorizontal, or kVertical.
  std::vector<int> component_of_left, component_of_right;
};

// Decomposes `g`.  A precomputed maximum matching can be supplied to check
// matching-invariance; by default the deterministic maximum matching is
// used.  The result partition is identical either way.
DmDecomposition dm_decompose(const BipartiteGraph& g,
                             const Matching* matching = nullptr);

// Middle blocks reachable from `comp` along successor arcs, including
// itself, ascending.
std::vector<int> descendant_components(const DmDecomposition& dm, int comp);

// Where sensors act on the pencil-carrying blocks: for every flagged middle
// block (one containing an s-edge between its own vertices), the states
// whose measurement resolves it — the state lefts of the block itself and of
// every block it reaches.
struct SEdgeReport {
  std::vector<int> flagged;                // 1-based canonical block indices
  std::vector<std::vector<int>> targets;   // per flagged block, 1-based states
  int count() const { return static_cast<int>(flagged.size()); }
};

// `n_states`: number of leading left vertices that are states (the rest are
// inputs and never valid sensor targets).
SEdgeReport s_edge_report(const DmDecomposition& dm, int n_states);

}  // namespace strobs

#endif  // STROBS_DM_HPP_
