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

#include <random>
#include <vector>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "strobs/bipartite.hpp"
#include "strobs/dm.hpp"
#include "strobs/instances.hpp"
#include "strobs/pattern.hpp"

namespace strobs {
namespace {

TEST_SUITE("dm") {

TEST_CASE("branching example decomposes into the known chain of blocks") {
  const StructuredSystem sys = fixtures::five_state_branching();
  const BipartiteGraph g = system_bipartite(sys, /*with_pencil_edges=*/true);
  const DmDecomposition dm = dm_decompose(g);

  CHECK(dm.horizontal_lefts.empty());
  CHECK(dm.horizontal_rights.empty());
  CHECK(dm.vertical_lefts.empty());
  CHECK(dm.vertical_rights.empty());
  REQUIRE(dm.components.size() == 4);

  // Left ids: x1..x5 = 0..4, u1 = 5.  Right ids: x1..x5 = 0..4, y1 = 5.
  CHECK(dm.components[0].lefts == std::vector<int>{5});
  CHECK(dm.components[0].rights == std::vector<int>{0});
  CHECK_FALSE(dm.components[0].has_pencil_edge);

  CHECK(dm.components[1].lefts == std::vector<int>{0, 1});
  CHECK(dm.components[1].rights == std::vector<int>{1, 3});
  CHECK(dm.components[1].has_pencil_edge);

  CHECK(dm.components[2].lefts == std::vector<int>{2, 3});
  CHECK(dm.components[2].rights == std::vector<int>{2, 4});
  CHECK(dm.components[2].has_pencil_edge);

  CHECK(dm.components[3].lefts == std::vector<int>{4});
  CHECK(dm.components[3].rights == std::vector<int>{5});
  CHECK_FALSE(dm.components[3].has_pencil_edge);

  // The partial order is the chain 4 -> 3 -> 2 -> 1.
  CHECK(dm.successors[0].empty());
  CHECK(dm.successors[1] == std::vector<int>{0});
  CHECK(dm.successors[2] == std::vector<int>{1});
  CHECK(dm.successors[3] == std::vector<int>{2});
  CHECK(descendant_components(dm, 3) == std::vector<int>{0, 1, 2, 3});

  CHECK(dm.component_of_left[5] == 0);
  CHECK(dm.component_of_left[0] == 1);
  CHECK(dm.component_of_right[4] == 2);
  CHECK(dm.component_of_right[5] == 3);
}

TEST_CASE("s-edge report lists flagged blocks and their target states") {
  const StructuredSystem sys = fixtures::five_state_branching();
  const BipartiteGraph g = system_bipartite(sys, true);
  const SEdgeReport report = s_edge_report(dm_decompose(g), sys.n);
  REQUIRE(report.flagged == std::vector<int>{2, 3});
  CHECK(report.count() == 2);
  CHECK(report.targets[0] == std::vector<int>{1, 2});
  CHECK(report.targets[1] == std::vector<int>{1, 2, 3, 4});
}

TEST_CASE("unmatched columns and rows fall into the tails") {
  // A = 0, one sensor on x1: x2's column is deficient, both rows of A are
  // ancestors of nothing and x2 cannot be matched anywhere.
  const StructuredSystem sys = StructuredSystem::make(
      2, 0, 1, SparsityPattern(2, 2), SparsityPattern(2, 0),
      SparsityPattern::make(1, 2, {{1, 1}}, "C"), SparsityPattern(1, 0));
  const BipartiteGraph g = system_bipartite(sys, false);
  const DmDecomposition dm = dm_decompose(g);
  CHECK(dm.horizontal_lefts == std::vector<int>{1});
  CHECK(dm.horizontal_rights.empty());
  CHECK(dm.vertical_rights == std::vector<int>{0, 1});
  CHECK(dm.vertical_lefts.empty());
  REQUIRE(dm.components.size() == 1);
  CHECK(dm.components[0].lefts == std::vector<int>{0});
  CHECK(dm.components[0].rights == std::vector<int>{2});
  CHECK(dm.component_of_left[1] == DmDecomposition::kHorizontal);
  CHECK(dm.component_of_right[0] == DmDecomposition::kVertical);
}

TEST_CASE("horizontal tail pulls in everything an unmatched column reaches") {
  // No sensors; columns x1 and x2 both point only at row 1, so one of them
  // stays unmatched and reaches the other through the shared row.  Both
  // columns and row 1 land in the horizontal tail; row 2 has no edges and
  // forms the vertical tail on its own.
  const StructuredSystem sys = StructuredSystem::make(
      2, 0, 0,
      SparsityPattern::make(2, 2, {{1, 1}, {1, 2}}, "A"),
      SparsityPattern(2, 0), SparsityPattern(0, 2), SparsityPattern(0, 0));
  const BipartiteGraph g = system_bipartite(sys, false);
  const DmDecomposition dm = dm_decompose(g);
  CHECK(dm.horizontal_lefts == std::vector<int>{0, 1});
  CHECK(dm.horizontal_rights == std::vector<int>{0});
  CHECK(dm.vertical_rights == std::vector<int>{1});
  CHECK(dm.vertical_lefts.empty());
  CHECK(dm.components.empty());
}

TEST_CASE("decomposition does not depend on the maximum matching") {
  std::mt19937_64 rng(99);
  int exercised = 0;
  for (int trial = 0; trial < 80; ++trial) {
    GenConfig cfg;
    cfg.n = 3 + static_cast<int>(rng() % 5);
    cfg.q = static_cast<int>(rng() % 3);
    cfg.density = 0.2 + 0.1 * static_cast<double>(rng() % 5);
    cfg.dedicated = true;
    cfg.seed = rng();
    if (cfg.q > cfg.n) cfg.q = cfg.n;
    const StructuredSystem bare = gen_random(cfg);
    // Sprinkle a couple of sensors so middle blocks are nontrivial.
    PlacementResult placement;
    placement.add(1 + static_cast<int>(rng() % cfg.n), false,
                  SensorStage::kStage1);
    const StructuredSystem sys = with_placement(bare.a, bare.b, placement);
    const BipartiteGraph g = system_bipartite(sys, true);

    const DmDecomposition reference = dm_decompose(g);
    for (int rep = 0; rep < 6; ++rep) {
      const Matching random = testing::random_max_matching(g, rng);
      const DmDecomposition probe = dm_decompose(g, &random);
      REQUIRE(probe.components.size() == reference.components.size());
      CHECK(probe.horizontal_lefts == reference.horizontal_lefts);
      CHECK(probe.horizontal_rights == reference.horizontal_rights);
      CHECK(probe.vertical_lefts == reference.vertical_lefts);
      CHECK(probe.vertical_rights == reference.vertical_rights);
      for (std::size_t c = 0; c < reference.components.size(); ++c) {
        CHECK(probe.components[c].lefts == reference.components[c].lefts);
        CHECK(probe.components[c].rights == reference.components[c].rights);
        CHECK(probe.components[c].has_pencil_edge ==
              reference.components[c].has_pencil_edge);
      }
      CHECK(probe.successors == reference.successors);
      ++exercised;
    }
  }
  CHECK(exercised > 100);
}

TEST_CASE("a non-maximum matching is rejected") {
  const StructuredSystem sys = fixtures::five_state_branching();
  const BipartiteGraph g = system_bipartite(sys, true);
  Matching empty;
  empty.right_of_left.assign(g.n_left(), -1);
  empty.left_of_right.assign(g.n_right(), -1);
  CHECK_THROWS_AS(dm_decompose(g, &empty), std::logic_error);
  Matching tiny;
  tiny.right_of_left.assign(1, -1);
  tiny.left_of_right.assign(1, -1);
  CHECK_THROWS_AS(dm_decompose(g, &tiny), std::logic_error);
}

}  // TEST_SUITE

}  // namespace
}  // namespace strobs
