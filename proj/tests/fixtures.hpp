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

#ifndef STROBS_TESTS_FIXTURES_HPP_
#define STROBS_TESTS_FIXTURES_HPP_

#include "strobs/instances.hpp"
#include "strobs/pattern.hpp"

namespace strobs::fixtures {

// Five states on a branching chain driven by one input, observed at the
// chain's end.  Not state-and-input observable as given; it becomes
// observable with sensors on x1 and x5.
inline StructuredSystem five_state_branching() {
  return StructuredSystem::make(
      5, 1, 1,
      SparsityPattern::make(5, 5,
                            {{1, 1}, {2, 1}, {2, 2}, {3, 4},
                             {4, 1}, {4, 2}, {5, 3}, {5, 4}},
                            "A"),
      SparsityPattern::make(5, 1, {{1, 1}}, "B"),
      SparsityPattern::make(1, 5, {{1, 5}}, "C"), SparsityPattern(1, 1));
}

// Every state has a self-loop; the single input drives x1 and the dynamics
// fork behind x2, so the input reaches the two sink components {x4} and
// {x5}.  The optimal placement is exactly one sensor per sink.
inline StructuredSystem selfloop_fork() {
  return StructuredSystem::make(
      5, 1, 0,
      SparsityPattern::make(5, 5,
                            {{1, 1}, {2, 2}, {3, 3}, {4, 4}, {5, 5},
                             {2, 1}, {3, 2}, {5, 2}, {4, 3}},
                            "A"),
      SparsityPattern::make(5, 1, {{1, 1}}, "B"), SparsityPattern(0, 5),
      SparsityPattern(0, 1));
}

// Four directed four-state groups, each driven by its own input at the
// head, with cross edges x(4k+2) <- x(4k+6) chaining the groups together.
// The two-phase heuristic needs the four tail states plus two more.
inline StructuredSystem four_group_cascade() {
  std::vector<std::pair<int, int>> a;
  for (int g = 0; g < 4; ++g) {
    const int s = 4 * g + 1;  // states s, s+1, s+2, s+3
    a.push_back({s + 1, s});
    a.push_back({s + 2, s + 1});
    a.push_back({s + 3, s + 1});
    a.push_back({s + 3, s + 2});
  }
  a.insert(a.end(), {{2, 6}, {2, 10}, {6, 10}, {6, 14}, {10, 14}});
  return StructuredSystem::make(
      16, 4, 0, SparsityPattern::make(16, 16, a, "A"),
      SparsityPattern::make(16, 4, {{1, 1}, {5, 2}, {9, 3}, {13, 4}}, "B"),
      SparsityPattern(0, 16), SparsityPattern(0, 4));
}

// Family with a gap between the sensor-count bounds: k self-looped states
// feed a hub x(k+1) that the input drives; the hub closes a two-cycle with
// x(k+2) and also feeds x(k+3), which rejoins through x(k+2).  The auxiliary
// minimum is k+1 but no placement of that size works; the optimum is
// k+2 = the upper bound.
inline StructuredSystem bounds_gap(int k) {
  std::vector<std::pair<int, int>> a;
  for (int i = 1; i <= k; ++i) {
    a.push_back({i, i});
    a.push_back({k + 1, i});
  }
  a.insert(a.end(),
           {{k + 2, k + 1}, {k + 3, k + 1}, {k + 2, k + 3}, {k + 1, k + 2}});
  return StructuredSystem::make(
      k + 3, 1, 0, SparsityPattern::make(k + 3, k + 3, a, "A"),
      SparsityPattern::make(k + 3, 1, {{k + 1, 1}}, "B"),
      SparsityPattern(0, k + 3), SparsityPattern(0, 1));
}

// Three elements, three two-element subsets; a minimum cover has size 2.
inline SetCoverInstance cover_three() {
  return SetCoverInstance{3, {{1, 2}, {2, 3}, {1, 3}}};
}

// Three decoupled self-looped states with the input on x1: the input
// reaches exactly one sink, exercising the fallback.
inline StructuredSystem diagonal_fallback() {
  return StructuredSystem::make(
      3, 1, 0,
      SparsityPattern::make(3, 3, {{1, 1}, {2, 2}, {3, 3}}, "A"),
      SparsityPattern::make(3, 1, {{1, 1}}, "B"), SparsityPattern(0, 3),
      SparsityPattern(0, 1));
}

}  // namespace strobs::fixtures

#endif  // STROBS_TESTS_FIXTURES_HPP_
