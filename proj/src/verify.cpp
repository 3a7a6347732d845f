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

#include "strobs/verify.hpp"

#include <Eigen/Dense>
#include <Eigen/SVD>

#include <algorithm>
#include <random>
#include <stdexcept>

#include "strobs/bipartite.hpp"
#include "strobs/digraph.hpp"
#include "strobs/dm.hpp"
#include "strobs/error.hpp"

namespace strobs {

GsioVerdict check_gsio_dm(const StructuredSystem& sys) {
  DmRouteReport report;

  // Condition 1 on the plain bipartite graph.
  const BipartiteGraph plain = system_bipartite(sys, /*with_pencil_edges=*/false);
  const Matching m0 = max_matching(plain);
  const DmDecomposition dm0 = dm_decompose(plain, &m0);
  for (int l = 0; l < plain.n_left(); ++l) {
    if (m0.left_matched(l)) continue;
    if (l < sys.n) {
      report.deficient_states.push_back(l + 1);
    } else {
      report.deficient_inputs.push_back(l - sys.n + 1);
    }
  }
  report.rank_ok = dm0.horizontal_lefts.empty();

  // Condition 2 on the pencil bipartite graph.
  const BipartiteGraph pencil = system_bipartite(sys, /*with_pencil_edges=*/true);
  const DmDecomposition dm1 = dm_decompose(pencil);
  report.flagged_components = s_edge_report(dm1, sys.n).flagged;
  report.pencil_ok = report.flagged_components.empty();

  GsioVerdict verdict;
  verdict.gsio = report.ok();
  verdict.dm = std::move(report);
  return verdict;
}

GsioVerdict check_gsio_digraph(const StructuredSystem& sys) {
  DigraphRouteReport report;
  const SystemDigraph g(sys);

  const std::vector<int> xu = g.state_and_input_vertices();
  const std::vector<int> xy = g.state_and_output_vertices();
  report.theta_required = sys.n + sys.q;
  report.theta_value = theta(g, xu, xy);
  report.rank_ok = report.theta_value == report.theta_required;

  const std::vector<bool> reaches = y_reached(g);
  for (int i = 1; i <= sys.n; ++i) {
    if (!reaches[g.state_vertex(i)]) report.unreached_states.push_back(i);
  }
  report.reach_ok = report.unreached_states.empty();

  report.delta0_states = delta0(g);
  for (int v : v_ess(g, g.input_vertices(), g.output_vertices())) {
    if (g.is_state(v)) report.essential_states.push_back(v + 1);
  }
  for (int i : report.delta0_states) {
    if (!std::binary_search(report.essential_states.begin(),
                            report.essential_states.end(), i)) {
      report.violating_states.push_back(i);
    }
  }
  report.source_ok = report.violating_states.empty();

  GsioVerdict verdict;
  verdict.gsio = report.ok();
  verdict.digraph = std::move(report);
  return verdict;
}

GsioVerdict check_gsio_both(const StructuredSystem& sys) {
  GsioVerdict by_dm = check_gsio_dm(sys);
  GsioVerdict by_digraph = check_gsio_digraph(sys);
  if (by_dm.gsio != by_digraph.gsio) {
    throw std::logic_error(
        "check_gsio_both: decomposition and digraph routes disagree");
  }
  GsioVerdict verdict;
  verdict.gsio = by_dm.gsio;
  verdict.dm = std::move(by_dm.dm);
  verdict.digraph = std::move(by_digraph.digraph);
  return verdict;
}

StructObsVerdict check_struct_obs(const SparsityPattern& a,
                                  const SparsityPattern& c) {
  if (a.rows() != a.cols()) {
    throw InputError("state pattern must be square");
  }
  if (c.cols() != a.cols()) {
    throw InputError("output pattern has " + std::to_string(c.cols()) +
                     " columns, expected " + std::to_string(a.cols()));
  }
  const int n = a.rows();
  const StructuredSystem sys =
      StructuredSystem::make(n, 0, c.rows(), a, SparsityPattern(n, 0), c,
                             SparsityPattern(c.rows(), 0));
  const SystemDigraph g(sys);

  StructObsVerdict verdict;
  verdict.theta_required = n;
  verdict.theta_value = theta(g, g.state_vertices(), g.state_and_output_vertices());
  verdict.rank_ok = verdict.theta_value == n;
  const std::vector<bool> reaches = y_reached(g);
  for (int i = 1; i <= n; ++i) {
    if (!reaches[g.state_vertex(i)]) verdict.unreached_states.push_back(i);
  }
  verdict.reach_ok = verdict.unreached_states.empty();
  verdict.observable = verdict.rank_ok && verdict.reach_ok;
  return verdict;
}

StructObsVerdict check_struct_obs(const SparsityPattern& a,
                                  const std::vector<int>& sensor_states) {
  std::vector<std::pair<int, int>> entries;
  int row = 0;
  for (int s : sensor_states) entries.emplace_back(++row, s);
  return check_struct_obs(a,
                          SparsityPattern::make(row, a.cols(), entries, "C"));
}

int numeric_rank_oracle(const SparsityPattern& m, std::uint64_t seed,
                        int trials, double tol) {
  if (m.rows() == 0 || m.cols() == 0) return 0;
  std::mt19937_64 rng(seed);
  const auto unit = [&rng]() {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
  };
  int best = 0;
  for (int t = 0; t < trials; ++t) {
    Eigen::MatrixXd mat = Eigen::MatrixXd::Zero(m.rows(), m.cols());
    for (const auto& [row, col] : m.entries()) {
      mat(row - 1, col - 1) = 1.0 + unit();
    }
    const Eigen::JacobiSVD<Eigen::MatrixXd> svd(mat);
    const auto& sigma = svd.singularValues();
    if (sigma.size() == 0) continue;
    const double cutoff = tol * sigma(0);
    int rank = 0;
    for (Eigen::Index i = 0; i < sigma.size(); ++i) {
      if (sigma(i) > cutoff) ++rank;
    }
    best = std::max(best, rank);
  }
  return best;
}

}  // namespace strobs
