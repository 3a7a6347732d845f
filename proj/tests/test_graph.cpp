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

#include <doctest.h>

#include <algorithm>
#include <random>
#include <vector>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "strobs/bipartite.hpp"
#include "strobs/digraph.hpp"
#include "strobs/error.hpp"
#include "strobs/instances.hpp"
#include "strobs/verify.hpp"

namespace strobs {
namespace {

TEST_SUITE("graph") {

TEST_CASE("system bipartite graph merges coinciding pencil edges") {
  const StructuredSystem sys = fixtures::five_state_branching();
  const BipartiteGraph g = system_bipartite(sys, /*with_pencil_edges=*/true);
  CHECK(g.n_left() == 6);   // x1..x5, u1
  CHECK(g.n_right() == 6);  // x1..x5, y1

  // A(1,1) coincides with the pencil diagonal: one edge, both flags.
  int found = 0;
  for (const BipartiteEdge& e : g.edges()) {
    if (e.left == 0 && e.right == 0) {
      ++found;
      CHECK(e.structural);
      CHECK(e.pencil);
    }
    if (e.left == 2 && e.right == 2) {  // x3 has no self-loop: pencil only
      CHECK_FALSE(e.structural);
      CHECK(e.pencil);
    }
  }
  CHECK(found == 1);

  // Without pencil edges the diagonal of x3 disappears.
  const BipartiteGraph plain = system_bipartite(sys, false);
  for (const BipartiteEdge& e : plain.edges()) {
    CHECK(e.structural);
    CHECK_FALSE(e.pencil);
    CHECK(!(e.left == 2 && e.right == 2));
  }
}

TEST_CASE("maximum matching is deterministic and maximal") {
  const StructuredSystem sys = fixtures::five_state_branching();
  const BipartiteGraph g = system_bipartite(sys, true);
  const Matching m = max_matching(g);
  CHECK(m.size == 6);  // perfect: the pencil graph always saturates states
  for (int l = 0; l < g.n_left(); ++l) CHECK(m.left_matched(l));
}

TEST_CASE("must-match vertices stay matched or raise a Hall violation") {
  // Two columns compete for one row.
  BipartiteGraph g(2, 1);
  g.add_edge(0, 0, true, false);
  g.add_edge(1, 0, true, false);
  const Matching m = max_matching(g, {1});
  CHECK(m.left_matched(1));
  CHECK_FALSE(m.left_matched(0));
  CHECK(m.size == 1);
  CHECK_THROWS_AS(max_matching(g, {0, 1}), InfeasibleError);

  const std::vector<std::string> labels{"u1", "u2"};
  try {
    max_matching(g, {0, 1}, &labels);
    FAIL("expected InfeasibleError");
  } catch (const InfeasibleError& e) {
    const std::string what = e.what();
    CHECK(what.find("u1") != std::string::npos);
  }
}

TEST_CASE("generic rank equals the numeric rank of random fills") {
  const SparsityPattern full =
      SparsityPattern::make(2, 2, {{1, 1}, {1, 2}, {2, 1}, {2, 2}}, "M");
  CHECK(generic_rank(full) == 2);
  CHECK(numeric_rank_oracle(full, 7) == 2);

  const SparsityPattern rank1 =
      SparsityPattern::make(2, 2, {{1, 1}, {1, 2}}, "M");
  CHECK(generic_rank(rank1) == 1);
  CHECK(numeric_rank_oracle(rank1, 7) == 1);

  CHECK(generic_rank(SparsityPattern(3, 3)) == 0);
  CHECK(numeric_rank_oracle(SparsityPattern(3, 3), 7) == 0);

  std::mt19937_64 rng(2026);
  for (int trial = 0; trial < 150; ++trial) {
    const int rows = 1 + static_cast<int>(rng() % 6);
    const int cols = 1 + static_cast<int>(rng() % 6);
    std::vector<std::pair<int, int>> entries;
    for (int r = 1; r <= rows; ++r) {
      for (int c = 1; c <= cols; ++c) {
        if (rng() % 100 < 35) entries.emplace_back(r, c);
      }
    }
    const SparsityPattern p = SparsityPattern::make(rows, cols, entries, "M");
    CHECK(generic_rank(p) == numeric_rank_oracle(p, rng()));
  }
}

TEST_CASE("digraph wiring matches the system matrices") {
  const StructuredSystem sys = fixtures::five_state_branching();
  const SystemDigraph g(sys);
  CHECK(g.vertex_count() == 7);
  // A(2,1): x1 -> x2; B(1,1): u1 -> x1; C(1,5): x5 -> y1.
  const auto& from_x1 = g.successors(g.state_vertex(1));
  CHECK(std::count(from_x1.begin(), from_x1.end(), g.state_vertex(2)) == 1);
  const auto& from_u1 = g.successors(g.input_vertex(1));
  CHECK(from_u1 == std::vector<int>{g.state_vertex(1)});
  const auto& from_x5 = g.successors(g.state_vertex(5));
  CHECK(from_x5 == std::vector<int>{g.output_vertex(1)});
  CHECK(g.is_state(0));
  CHECK(g.is_input(5));
  CHECK(g.is_output(6));
}

TEST_CASE("strongly connected components and sinks") {
  // x1 <-> x2 cycle feeding x3; x3 alone is the only sink.
  const SparsityPattern a = SparsityPattern::make(
      3, 3, {{2, 1}, {1, 2}, {3, 2}}, "A");
  const SccResult sccs = scc_decompose(pattern_adjacency(a));
  REQUIRE(sccs.components.size() == 2);
  CHECK(sccs.components[0] == std::vector<int>{0, 1});
  CHECK(sccs.components[1] == std::vector<int>{2});
  CHECK_FALSE(sccs.is_sink[0]);
  CHECK(sccs.is_sink[1]);
  CHECK(sccs.component_of[0] == sccs.component_of[1]);

  const std::vector<bool> reach = reachable_from(pattern_adjacency(a), 0);
  CHECK(reach == std::vector<bool>{true, true, true});
  const std::vector<bool> from_sink = reachable_from(pattern_adjacency(a), 2);
  CHECK(from_sink == std::vector<bool>{false, false, true});
}

TEST_CASE("theta counts an edge system, not paths") {
  const StructuredSystem sys = fixtures::five_state_branching();
  const SystemDigraph g(sys);
  CHECK(theta(g, g.state_and_input_vertices(), g.state_and_output_vertices()) ==
        6);
  // x5's column of A is empty, so without the output x5 has no edge target.
  CHECK(theta(g, g.state_vertices(), g.state_vertices()) == 4);
}

TEST_CASE("rho and essential vertices on the branching example") {
  const StructuredSystem sys = fixtures::five_state_branching();
  const SystemDigraph g(sys);
  const std::vector<int> u = g.input_vertices();
  const std::vector<int> y = g.output_vertices();
  CHECK(rho(g, u, y) == 1);
  // Removing x4 disconnects the input from the output.
  CHECK(rho(g, u, y, {g.state_vertex(4)}) == 0);
  // A single output caps every linking at one path, so adding any state as a
  // source never raises rho.
  CHECK(delta0(g) == std::vector<int>{1, 2, 3, 4, 5});
  const std::vector<int> ess = v_ess(g, u, y);
  std::vector<int> ess_states;
  for (int v : ess) {
    if (g.is_state(v)) ess_states.push_back(v + 1);
  }
  CHECK(ess_states == std::vector<int>{1, 4, 5});
  const std::vector<bool> reaches = y_reached(g);
  for (int i = 1; i <= 5; ++i) CHECK(reaches[g.state_vertex(i)]);
}

TEST_CASE("zero-length paths count when a vertex is source and target") {
  // Single state, no edges, sensor on it: x1 is both in X u U and X u Y.
  const StructuredSystem sys = StructuredSystem::make(
      1, 0, 1, SparsityPattern(1, 1), SparsityPattern(1, 0),
      SparsityPattern::make(1, 1, {{1, 1}}, "C"), SparsityPattern(1, 0));
  const SystemDigraph g(sys);
  CHECK(rho(g, {0}, {0}) == 1);
  CHECK(rho(g, {0}, {1}) == 1);
}

TEST_CASE("rho and essential vertices agree with exhaustive search") {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 120; ++trial) {
    GenConfig cfg;
    cfg.n = 3 + static_cast<int>(rng() % 4);
    cfg.q = 1 + static_cast<int>(rng() % 2);
    cfg.density = 0.25 + 0.1 * static_cast<double>(rng() % 4);
    cfg.seed = rng();
    StructuredSystem sys;
    try {
      sys = gen_random(cfg);
    } catch (const InfeasibleError&) {
      continue;  // no full-rank B at this density
    }
    // Attach one or two random sensors so targets exist.
    PlacementResult placement;
    placement.add(1 + static_cast<int>(rng() % cfg.n), false,
                  SensorStage::kStage1);
    const int second = 1 + static_cast<int>(rng() % cfg.n);
    if (!placement.measures_state(second)) {
      placement.add(second, false, SensorStage::kStage1);
    }
    const StructuredSystem observed =
        with_placement(sys.a, sys.b, placement);
    const SystemDigraph g(observed);

    std::vector<std::vector<int>> adj = g.adjacency();
    const std::vector<int> u = g.input_vertices();
    const std::vector<int> y = g.output_vertices();
    CHECK(rho(g, u, y) == testing::brute_rho(adj, u, y));
    CHECK(v_ess(g, u, y) == testing::brute_v_ess(adj, u, y));

    const std::vector<int> xu = g.state_and_input_vertices();
    CHECK(rho(g, xu, y) == testing::brute_rho(adj, xu, y));
  }
}

}  // TEST_SUITE

}  // namespace
}  // namespace strobs
