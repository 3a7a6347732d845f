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

#ifndef STROBS_DIGRAPH_HPP_
#define STROBS_DIGRAPH_HPP_

#include <vector>

#include "strobs/pattern.hpp"

namespace strobs {

// The system digraph.  Vertices are 0-based global ids:
//   states  x_1..x_n -> 0 .. n-1
//   inputs  u_1..u_q -> n .. n+q-1
//   outputs y_1..y_m -> n+q .. n+q+m-1
// Edges: x_j -> x_i per A(i,j), u_j -> x_i per B(i,j), x_j -> y_i per C(i,j),
// u_j -> y_i per D(i,j).
class SystemDigraph {
 public:
  explicit SystemDigraph(const StructuredSystem& sys);

  int n() const { return n_; }
  int q() const { return q_; }
  int m() const { return m_; }
  int vertex_count() const { return n_ + q_ + m_; }

  int state_vertex(int i) const { return i - 1; }        // 1-based in
  int input_vertex(int j) const { return n_ + j - 1; }   // 1-based in
  int output_vertex(int k) const { return n_ + q_ + k - 1; }
  bool is_state(int v) const { return v < n_; }
  bool is_input(int v) const { return v >= n_ && v < n_ + q_; }
  bool is_output(int v) const { return v >= n_ + q_; }

  std::vector<int> state_vertices() const;
  std::vector<int> input_vertices() const;
  std::vector<int> output_vertices() const;
  std::vector<int> state_and_input_vertices() const;
  std::vector<int> state_and_output_vertices() const;

  const std::vector<std::vector<int>>& adjacency() const { return adj_; }
  const std::vector<int>& successors(int v) const { return adj_[v]; }

 private:
  int n_, q_, m_;
  std::vector<std::vector<int>> adj_;
};

// Adjacency of the digraph of a square pattern: 0-based edge j -> i per
// nonzero m(i, j).
std::vector<std::vector<int>> pattern_adjacency(const SparsityPattern& m);

// Strongly connected components.  Components are listed sorted by their
// smallest vertex; a component is a sink when no edge leaves it.
struct SccResult {
  std::vector<std::vector<int>> components;  // each ascending
  std::vector<int> component_of;             // vertex -> component index
  std::vector<bool> is_sink;
};

SccResult scc_decompose(const std::vector<std::vector<int>>& adj);

// Vertices reachable from `start` (including itself).
std::vector<bool> reachable_from(const std::vector<std::vector<int>>& adj,
                                 int start);

// theta(V1, V2): the maximum number of single edges with sources in V1 and
// targets in V2, no two sharing a source and no two sharing a target.
int theta(const SystemDigraph& g, const std::vector<int>& sources,
          const std::vector<int>& targets);

// rho(V1, V2): the maximum number of vertex-disjoint paths from V1 to V2
// (a maximum V1-V2 linking).  A vertex in both sets contributes a
// zero-length path.  Vertices listed in `banned` are removed first.
int rho(const SystemDigraph& g, const std::vector<int>& sources,
        const std::vector<int>& targets, const std::vector<int>& banned = {});

// Vertices contained in every maximum V1-V2 linking (deleting one lowers
// rho), ascending global ids.
std::vector<int> v_ess(const SystemDigraph& g, const std::vector<int>& sources,
                       const std::vector<int>& targets);

// States x_i (1-based) whose addition as a source leaves rho(U, Y) unchanged.
std::vector<int> delta0(const SystemDigraph& g);

// reaches_output[v]: some output is reachable from v.
std::vector<bool> y_reached(const SystemDigraph& g);

}  // namespace strobs

#endif  // STROBS_DIGRAPH_HPP_
