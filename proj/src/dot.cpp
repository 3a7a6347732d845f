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

#include "strobs/dot.hpp"

#include <sstream>

#include "strobs/bipartite.hpp"
#include "strobs/digraph.hpp"
#include "strobs/dm.hpp"

namespace strobs {
namespace {

// Vertex name in the digraph: x1.., u1.., y1..
std::string vertex_name(const StructuredSystem& sys, int v) {
  if (v < sys.n) return "x" + std::to_string(v + 1);
  if (v < sys.n + sys.q) return "u" + std::to_string(v - sys.n + 1);
  return "y" + std::to_string(v - sys.n - sys.q + 1);
}

// Node id of a bipartite vertex ("l_x1", "r_y2", ...).
std::string left_id(const StructuredSystem& sys, int l) {
  return (l < sys.n ? "l_x" + std::to_string(l + 1)
                    : "l_u" + std::to_string(l - sys.n + 1));
}
std::string right_id(const StructuredSystem& sys, int r) {
  return (r < sys.n ? "r_x" + std::to_string(r + 1)
                    : "r_y" + std::to_string(r - sys.n + 1));
}
std::string left_label(const StructuredSystem& sys, int l) {
  return (l < sys.n ? "x" + std::to_string(l + 1)
                    : "u" + std::to_string(l - sys.n + 1));
}
std::string right_label(const StructuredSystem& sys, int r) {
  return (r < sys.n ? "x" + std::to_string(r + 1) + "'"
                    : "y" + std::to_string(r - sys.n + 1));
}

void emit_vertices(std::ostringstream& out, const StructuredSystem& sys,
                   const std::vector<int>& lefts,
                   const std::vector<int>& rights, const char* indent) {
  for (int l : lefts) {
    out << indent << left_id(sys, l) << " [label=\"" << left_label(sys, l)
        << "\"];\n";
  }
  for (int r : rights) {
    out << indent << right_id(sys, r) << " [label=\"" << right_label(sys, r)
        << "\"];\n";
  }
}

}  // namespace

std::string dot_digraph(const StructuredSystem& sys) {
  const SystemDigraph g(sys);
  std::ostringstream out;
  out << "digraph system {\n  rankdir=LR;\n";
  for (int v = 0; v < g.vertex_count(); ++v) {
    const char* shape = g.is_state(v)   ? "circle"
                        : g.is_input(v) ? "box"
                                        : "doublecircle";
    out << "  " << vertex_name(sys, v) << " [shape=" << shape << "];\n";
  }
  for (int v = 0; v < g.vertex_count(); ++v) {
    for (int w : g.successors(v)) {
      out << "  " << vertex_name(sys, v) << " -> " << vertex_name(sys, w)
          << ";\n";
    }
  }
  out << "}\n";
  return out.str();
}

std::string dot_dm(const StructuredSystem& sys) {
  const BipartiteGraph g = system_bipartite(sys, /*with_pencil_edges=*/true);
  const Matching m = max_matching(g);
  const DmDecomposition dm = dm_decompose(g, &m);

  std::ostringstream out;
  out << "digraph decomposition {\n  rankdir=LR;\n  node [shape=ellipse];\n";
  if (!dm.horizontal_lefts.empty() || !dm.horizontal_rights.empty()) {
    out << "  subgraph cluster_h {\n    label=\"B0\";\n    style=dotted;\n";
    emit_vertices(out, sys, dm.horizontal_lefts, dm.horizontal_rights, "    ");
    out << "  }\n";
  }
  for (int c = 0; c < static_cast<int>(dm.components.size()); ++c) {
    out << "  subgraph cluster_c" << c + 1 << " {\n    label=\"B" << c + 1
        << "\";\n";
    if (dm.components[c].has_pencil_edge) {
      out << "    style=filled;\n    fillcolor=lightgrey;\n";
    }
    emit_vertices(out, sys, dm.components[c].lefts, dm.components[c].rights,
                  "    ");
    out << "  }\n";
  }
  if (!dm.vertical_lefts.empty() || !dm.vertical_rights.empty()) {
    out << "  subgraph cluster_v {\n    label=\"Binf\";\n    style=dotted;\n";
    emit_vertices(out, sys, dm.vertical_lefts, dm.vertical_rights, "    ");
    out << "  }\n";
  }
  for (const BipartiteEdge& e : g.edges()) {
    const bool matched = m.right_of_left[e.left] == e.right;
    if (e.structural) {
      out << "  " << left_id(sys, e.left) << " -> " << right_id(sys, e.right);
      if (matched) out << " [penwidth=2]";
      out << ";\n";
    }
    if (e.pencil) {
      out << "  " << left_id(sys, e.left) << " -> " << right_id(sys, e.right)
          << " [style=dashed";
      if (matched && !e.structural) out << ", penwidth=2";
      out << "];\n";
    }
  }
  out << "}\n";
  return out.str();
}

}  // namespace strobs
