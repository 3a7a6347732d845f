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

#include "strobs/digraph.hpp"

#include <algorithm>
#include <numeric>
#include <queue>

#include "strobs/bipartite.hpp"

namespace strobs {

// ---------------------------------------------------------------------------
// Construction
// ---------------------------------------------------------------------------

SystemDigraph::SystemDigraph(const StructuredSystem& sys)
    : n_(sys.n), q_(sys.q), m_(sys.m), adj_(sys.n + sys.q + sys.m) {
  for (const auto& [i, j] : sys.a.entries()) {
    adj_[j - 1].push_back(i - 1);
  }
  for (const auto& [i, j] : sys.b.entries()) {
    adj_[n_ + j - 1].push_back(i - 1);
  }
  for (const auto& [i, j] : sys.c.entries()) {
    adj_[j - 1].push_back(n_ + q_ + i - 1);
  }
  for (const auto& [i, j] : sys.d.entries()) {
    adj_[n_ + j - 1].push_back(n_ + q_ + i - 1);
  }
  for (auto& list : adj_) std::sort(list.begin(), list.end());
}

namespace {

std::vector<int> iota_range(int first, int count) {
  std::vector<int> out(count);
  std::iota(out.begin(), out.end(), first);
  return out;
}

}  // namespace

std::vector<int> SystemDigraph::state_vertices() const {
  return iota_range(0, n_);
}
std::vector<int> SystemDigraph::input_vertices() const {
  return iota_range(n_, q_);
}
std::vector<int> SystemDigraph::output_vertices() const {
  return iota_range(n_ + q_, m_);
}
std::vector<int> SystemDigraph::state_and_input_vertices() const {
  return iota_range(0, n_ + q_);
}
std::vector<int> SystemDigraph::state_and_output_vertices() const {
  std::vector<int> out = iota_range(0, n_);
  const std::vector<int> ys = output_vertices();
  out.insert(out.end(), ys.begin(), ys.end());
  return out;
}

std::vector<std::vector<int>> pattern_adjacency(const SparsityPattern& m) {
  std::vector<std::vector<int>> adj(std::max(m.rows(), m.cols()));
  for (const auto& [i, j] : m.entries()) adj[j - 1].push_back(i - 1);
  for (auto& list : adj) std::sort(list.begin(), list.end());
  return adj;
}

// ---------------------------------------------------------------------------
// Strongly connected components (iterative Tarjan)
// ---------------------------------------------------------------------------

SccResult scc_decompose(const std::vector<std::vector<int>>& adj) {
  const int n = static_cast<int>(adj.size());
  std::vector<int> index(n, -1), low(n, 0), on_stack(n, 0);
  std::vector<int> stack;
  std::vector<std::vector<int>> components;
  std::vector<int> component_of(n, -1);
  int next_index = 0;

  struct Frame {
    int v;
    std::size_t child;
  };
  std::vector<Frame> call;

  for (int root = 0; root < n; ++root) {
    if (index[root] >= 0) continue;
    call.push_back({root, 0});
    index[root] = low[root] = next_index++;
    stack.push_back(root);
    on_stack[root] = 1;
    while (!call.empty()) {
      Frame& f = call.back();
      if (f.child < adj[f.v].size()) {
        const int w = adj[f.v][f.child++];
        if (index[w] < 0) {
          index[w] = low[w] = next_index++;
          stack.push_back(w);
          on_stack[w] = 1;
          call.push_back({w, 0});
        } else if (on_stack[w]) {
          low[f.v] = std::min(low[f.v], index[w]);
        }
      } else {
        const int v = f.v;
        call.pop_back();
        if (!call.empty()) {
          low[call.back().v] = std::min(low[call.back().v], low[v]);
        }
        if (low[v] == index[v]) {
          std::vector<int> comp;
          int w;
          do {
            w = stack.back();
            stack.pop_back();
            on_stack[w] = 0;
            comp.push_back(w);
          } while (w != v);
          std::sort(comp.begin(), comp.end());
          components.push_back(std::move(comp));
        }
      }
    }
  }

  // Deterministic external order: by smallest vertex.
  std::sort(components.begin(), components.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });
  for (std::size_t c = 0; c < components.size(); ++c) {
    for (int v : components[c]) component_of[v] = static_cast<int>(c);
  }
  std::vector<bool> is_sink(components.size(), true);
  for (int v = 0; v < n; ++v) {
    for (int w : adj[v]) {
      if (component_of[v] != component_of[w]) is_sink[component_of[v]] = false;
    }
  }
  return SccResult{std::move(components), std::move(component_of),
                   std::move(is_sink)};
}

std::vector<bool> reachable_from(const std::vector<std::vector<int>>& adj,
                                 int start) {
  std::vector<bool> seen(adj.size(), false);
  std::vector<int> stack{start};
  seen[start] = true;
  while (!stack.empty()) {
    const int v = stack.back();
    stack.pop_back();
    for (int w : adj[v]) {
      if (!seen[w]) {
        seen[w] = true;
        stack.push_back(w);
      }
    }
  }
  return seen;
}

// ---------------------------------------------------------------------------
// theta: vertex-disjoint single edges = bipartite matching
// ---------------------------------------------------------------------------

int theta(const SystemDigraph& g, const std::vector<int>& sources,
          const std::vector<int>& targets) {
  std::vector<int> target_slot(g.vertex_count(), -1);
  for (std::size_t t = 0; t < targets.size(); ++t) {
    target_slot[targets[t]] = static_cast<int>(t);
  }
  BipartiteGraph bg(static_cast<int>(sources.size()),
                    static_cast<int>(targets.size()));
  for (std::size_t s = 0; s < sources.size(); ++s) {
    for (int w : g.successors(sources[s])) {
      if (target_slot[w] >= 0) {
        bg.add_edge(static_cast<int>(s), target_slot[w], true, false);
      }
    }
  }
  return max_matching(bg).size;
}

// ---------------------------------------------------------------------------
// rho / v_ess / delta0: vertex-disjoint linkings via unit-capacity flow
// ---------------------------------------------------------------------------

namespace {

// Minimal max-flow structure; capacities are 0/1 and flow values stay small
// (bounded by min(|V1|, |V2|)), so BFS augmentation is plenty.
class FlowNet {
 public:
  explicit FlowNet(int nodes) : head_(nodes, -1) {}

  void add_edge(int from, int to) {
    arcs_.push_back({to, head_[from], 1});
    head_[from] = static_cast<int>(arcs_.size()) - 1;
    arcs_.push_back({from, head_[to], 0});
    head_[to] = static_cast<int>(arcs_.size()) - 1;
  }

  int max_flow(int s, int t) {
    int total = 0;
    std::vector<int> via(head_.size());
    for (;;) {
      std::fill(via.begin(), via.end(), -1);
      std::queue<int> queue;
      queue.push(s);
      via[s] = -2;
      while (!queue.empty() && via[t] == -1) {
        const int v = queue.front();
        queue.pop();
        for (int id = head_[v]; id >= 0; id = arcs_[id].next) {
          const int w = arcs_[id].to;
          if (arcs_[id].cap > 0 && via[w] == -1) {
            via[w] = id;
            queue.push(w);
          }
        }
      }
      if (via[t] == -1) break;
      for (int v = t; v != s;) {
        const int id = via[v];
        arcs_[id].cap -= 1;
        arcs_[id ^ 1].cap += 1;
        v = arcs_[id ^ 1].to;
      }
      ++total;
    }
    return total;
  }

 private:
  struct Arc {
    int to;
    int next;
    int cap;
  };
  std::vector<int> head_;
  std::vector<Arc> arcs_;
};

int rho_impl(const SystemDigraph& g, const std::vector<int>& sources,
             const std::vector<int>& targets, const std::vector<char>& banned) {
  const int nv = g.vertex_count();
  // Split vertices: in(v) = 2v, out(v) = 2v + 1; then source and sink.
  const int s = 2 * nv, t = 2 * nv + 1;
  FlowNet net(2 * nv + 2);
  for (int v = 0; v < nv; ++v) {
    if (!banned[v]) net.add_edge(2 * v, 2 * v + 1);
  }
  for (int v = 0; v < nv; ++v) {
    if (banned[v]) continue;
    for (int w : g.successors(v)) {
      if (!banned[w]) net.add_edge(2 * v + 1, 2 * w);
    }
  }
  for (int v : sources) {
    if (!banned[v]) net.add_edge(s, 2 * v);
  }
  for (int v : targets) {
    if (!banned[v]) net.add_edge(2 * v + 1, t);
  }
  return net.max_flow(s, t);
}

}  // namespace

int rho(const SystemDigraph& g, const std::vector<int>& sources,
        const std::vector<int>& targets, const std::vector<int>& banned) {
  std::vector<char> ban(g.vertex_count(), 0);
  for (int v : banned) ban[v] = 1;
  return rho_impl(g, sources, targets, ban);
}

std::vector<int> v_ess(const SystemDigraph& g, const std::vector<int>& sources,
                       const std::vector<int>& targets) {
  std::vector<char> ban(g.vertex_count(), 0);
  const int base = rho_impl(g, sources, targets, ban);
  std::vector<int> essential;
  for (int v = 0; v < g.vertex_count(); ++v) {
    ban[v] = 1;
    if (rho_impl(g, sources, targets, ban) < base) essential.push_back(v);
    ban[v] = 0;
  }
  return essential;
}

std::vector<int> delta0(const SystemDigraph& g) {
  const std::vector<int> inputs = g.input_vertices();
  const std::vector<int> outputs = g.output_vertices();
  const int base = rho(g, inputs, outputs);
  std::vector<int> result;
  std::vector<int> extended = inputs;
  extended.push_back(0);
  for (int i = 1; i <= g.n(); ++i) {
    extended.back() = g.state_vertex(i);
    if (rho(g, extended, outputs) == base) result.push_back(i);
  }
  return result;
}

std::vector<bool> y_reached(const SystemDigraph& g) {
  // Reverse reachability from the output vertices.
  std::vector<std::vector<int>> radj(g.vertex_count());
  for (int v = 0; v < g.vertex_count(); ++v) {
    for (int w : g.successors(v)) radj[w].push_back(v);
  }
  std::vector<bool> seen(g.vertex_count(), false);
  std::vector<int> stack;
  for (int y : g.output_vertices()) {
    seen[y] = true;
    stack.push_back(y);
  }
  while (!stack.empty()) {
    const int v = stack.back();
    stack.pop_back();
    for (int w : radj[v]) {
      if (!seen[w]) {
        seen[w] = true;
        stack.push_back(w);
      }
    }
  }
  return seen;
}

}  // namespace strobs
