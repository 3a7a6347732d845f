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
#include "strobs/bipartite.hpp"
#include "strobs/error.hpp"
#include "strobs/instances.hpp"
#include "strobs/pattern.hpp"
#include "strobs/verify.hpp"

namespace strobs {
namespace {

TEST_SUITE("verify") {

TEST_CASE("branching example fails only the pencil condition (dm route)") {
  const GsioVerdict verdict = check_gsio_dm(fixtures::five_state_branching());
  CHECK_FALSE(verdict.gsio);
  REQUIRE(verdict.dm.has_value());
  CHECK(verdict.dm->rank_ok);
  CHECK(verdict.dm->deficient_states.empty());
  CHECK(verdict.dm->deficient_inputs.empty());
  CHECK_FALSE(verdict.dm->pencil_ok);
  CHECK(verdict.dm->flagged_components == std::vector<int>{2, 3});
}

TEST_CASE("branching example fails only the source condition (digraph route)") {
  const GsioVerdict verdict =
      check_gsio_digraph(fixtures::five_state_branching());
  CHECK_FALSE(verdict.gsio);
  REQUIRE(verdict.digraph.has_value());
  const DigraphRouteReport& r = *verdict.digraph;
  CHECK(r.theta_value == 6);
  CHECK(r.theta_required == 6);
  CHECK(r.rank_ok);
  CHECK(r.unreached_states.empty());
  CHECK(r.reach_ok);
  CHECK(r.delta0_states == std::vector<int>{1, 2, 3, 4, 5});
  CHECK(r.essential_states == std::vector<int>{1, 4, 5});
  CHECK(r.violating_states == std::vector<int>{2, 3});
  CHECK_FALSE(r.source_ok);
}

TEST_CASE("measuring x1 and x5 makes the branching example observable") {
  const StructuredSystem bare = fixtures::five_state_branching();
  PlacementResult placement;
  placement.add(1, false, SensorStage::kStage2);
  placement.add(5, false, SensorStage::kStage1);
  const StructuredSystem sys = with_placement(bare.a, bare.b, placement);
  const GsioVerdict verdict = check_gsio_both(sys);
  CHECK(verdict.gsio);
  REQUIRE(verdict.dm.has_value());
  CHECK(verdict.dm->ok());
  REQUIRE(verdict.digraph.has_value());
  CHECK(verdict.digraph->ok());
  CHECK(verdict.digraph->violating_states.empty());
}

TEST_CASE("a state missing from every column kills the rank condition") {
  // x2 appears in no column of [A B; C D]: theta drops below n + q and the
  // dm route reports the same column as deficient.
  const StructuredSystem sys = StructuredSystem::make(
      2, 0, 1, SparsityPattern::make(2, 2, {{1, 1}}, "A"), SparsityPattern(2, 0),
      SparsityPattern::make(1, 2, {{1, 1}}, "C"), SparsityPattern(1, 0));
  const GsioVerdict by_dm = check_gsio_dm(sys);
  REQUIRE(by_dm.dm.has_value());
  CHECK_FALSE(by_dm.dm->rank_ok);
  CHECK(by_dm.dm->deficient_states == std::vector<int>{2});
  CHECK(by_dm.dm->deficient_inputs.empty());
  const GsioVerdict by_digraph = check_gsio_digraph(sys);
  REQUIRE(by_digraph.digraph.has_value());
  CHECK(by_digraph.digraph->theta_value == 1);
  CHECK(by_digraph.digraph->theta_required == 2);
  CHECK_FALSE(by_digraph.digraph->rank_ok);
}

TEST_CASE("dangling inputs are reported on the input side") {
  // One input that drives nothing: its column of [B; D] is empty.
  const StructuredSystem sys = StructuredSystem::make(
      1, 1, 1, SparsityPattern::make(1, 1, {{1, 1}}, "A"), SparsityPattern(1, 1),
      SparsityPattern::make(1, 1, {{1, 1}}, "C"), SparsityPattern(1, 1));
  const GsioVerdict verdict = check_gsio_dm(sys);
  REQUIRE(verdict.dm.has_value());
  CHECK_FALSE(verdict.dm->rank_ok);
  CHECK(verdict.dm->deficient_states.empty());
  CHECK(verdict.dm->deficient_inputs == std::vector<int>{1});
  CHECK_FALSE(check_gsio_digraph(sys).gsio);
}

TEST_CASE("both routes agree on every fixture and on random systems") {
  CHECK_NOTHROW(check_gsio_both(fixtures::five_state_branching()));
  CHECK_NOTHROW(check_gsio_both(fixtures::selfloop_fork()));
  CHECK_NOTHROW(check_gsio_both(fixtures::four_group_cascade()));
  CHECK_NOTHROW(check_gsio_both(reduce_setcover(fixtures::cover_three()).system));
  CHECK_NOTHROW(check_gsio_both(fixtures::bounds_gap(3)));

  std::mt19937_64 rng(2024);
  int observed_true = 0;
  int observed_false = 0;
  for (int trial = 0; trial < 200; ++trial) {
    GenConfig cfg;
    cfg.n = 2 + static_cast<int>(rng() % 6);
    cfg.q = static_cast<int>(rng() % 3);
    if (cfg.q > cfg.n) cfg.q = cfg.n;
    cfg.density = 0.15 + 0.15 * static_cast<double>(rng() % 4);
    cfg.dedicated = true;
    cfg.seed = rng();
    const StructuredSystem bare = gen_random(cfg);
    PlacementResult placement;
    const int sensors = 1 + static_cast<int>(rng() % cfg.n);
    for (int s = 1; s <= sensors; ++s) {
      placement.add(s, false, SensorStage::kStage1);
    }
    const StructuredSystem sys = with_placement(bare.a, bare.b, placement);
    const GsioVerdict verdict = check_gsio_both(sys);
    (verdict.gsio ? observed_true : observed_false) += 1;
    REQUIRE(verdict.dm.has_value());
    REQUIRE(verdict.digraph.has_value());
    CHECK(verdict.dm->ok() == verdict.digraph->ok());
  }
  // The sample must exercise both verdicts to mean anything.
  CHECK(observed_true > 10);
  CHECK(observed_false > 10);
}

TEST_CASE("plain observability: diagonal pattern needs every state measured") {
  const SparsityPattern a =
      SparsityPattern::make(3, 3, {{1, 1}, {2, 2}, {3, 3}}, "A");
  const StructObsVerdict all = check_struct_obs(a, std::vector<int>{1, 2, 3});
  CHECK(all.observable);
  CHECK(all.theta_value == 3);
  CHECK(all.rank_ok);
  CHECK(all.reach_ok);

  const StructObsVerdict one = check_struct_obs(a, std::vector<int>{1});
  CHECK_FALSE(one.observable);
  CHECK(one.rank_ok);  // self-loops keep every column matched
  CHECK(one.unreached_states == std::vector<int>{2, 3});
}

TEST_CASE("plain observability: a chain is observed from its end only") {
  const SparsityPattern a = SparsityPattern::make(3, 3, {{2, 1}, {3, 2}}, "A");
  CHECK(check_struct_obs(a, std::vector<int>{3}).observable);
  const StructObsVerdict front = check_struct_obs(a, std::vector<int>{1});
  CHECK_FALSE(front.observable);
  CHECK(front.theta_value == 2);
  CHECK_FALSE(front.rank_ok);
  CHECK(front.unreached_states == std::vector<int>{2, 3});
}

TEST_CASE("plain observability rejects mismatched shapes") {
  const SparsityPattern rect = SparsityPattern::make(2, 3, {{1, 1}}, "A");
  CHECK_THROWS_AS(check_struct_obs(rect, std::vector<int>{1}), InputError);
  const SparsityPattern a = SparsityPattern::make(2, 2, {{1, 1}}, "A");
  const SparsityPattern wide_c = SparsityPattern::make(1, 3, {{1, 1}}, "C");
  CHECK_THROWS_AS(check_struct_obs(a, wide_c), InputError);
  CHECK_THROWS_AS(check_struct_obs(a, std::vector<int>{3}), InputError);
}

TEST_CASE("numeric rank oracle agrees with the combinatorial rank") {
  const SparsityPattern full =
      SparsityPattern::make(2, 2, {{1, 1}, {1, 2}, {2, 1}, {2, 2}}, "M");
  CHECK(numeric_rank_oracle(full, 7) == 2);
  CHECK(generic_rank(full) == 2);

  const SparsityPattern rank_one = SparsityPattern::make(2, 2, {{1, 1}, {1, 2}}, "M");
  CHECK(numeric_rank_oracle(rank_one, 7) == 1);

  CHECK(numeric_rank_oracle(SparsityPattern(3, 3), 7) == 0);
  CHECK(numeric_rank_oracle(SparsityPattern(0, 0), 7) == 0);

  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 60; ++trial) {
    const int rows = 1 + static_cast<int>(rng() % 5);
    const int cols = 1 + static_cast<int>(rng() % 5);
    std::vector<std::pair<int, int>> entries;
    for (int r = 1; r <= rows; ++r) {
      for (int c = 1; c <= cols; ++c) {
        if (rng() % 100 < 40) entries.emplace_back(r, c);
      }
    }
    const SparsityPattern m = SparsityPattern::make(rows, cols, entries, "M");
    CHECK(numeric_rank_oracle(m, rng()) == generic_rank(m));
  }
}

}  // TEST_SUITE

}  // namespace
}  // namespace strobs
