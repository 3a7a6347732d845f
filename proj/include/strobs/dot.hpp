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

#ifndef STROBS_DOT_HPP_
#define STROBS_DOT_HPP_

#include <string>

#include "strobs/pattern.hpp"

namespace strobs {

// Graphviz rendering of the system digraph: states as circles, inputs as
// boxes, outputs as double circles.
std::string dot_digraph(const StructuredSystem& sys);

// Graphviz rendering of the pencil bipartite graph grouped by its
// decomposition: one cluster per middle block (flagged blocks shaded) plus
// tail clusters when present.  Structural edges are solid, pencil edges
// dashed, matching edges bold.
std::string dot_dm(const StructuredSystem& sys);

}  // namespace strobs

#endif  // STROBS_DOT_HPP_
