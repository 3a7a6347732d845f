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

#include "strobs/instances.hpp"

#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>

#include "strobs/bipartite.hpp"
#include "strobs/error.hpp"

namespace strobs {
namespace {

using nlohmann::json;

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open file: " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void validate_instance(const SetCoverInstance& inst) {
  if (inst.universe < 1) {
    throw InputError("set cover universe must have at least one element");
  }
  if (inst.subsets.empty()) {
    throw InputError("set cover needs at least one explicit subset");
  }
  for (int i = 0; i < static_cast<int>(inst.subsets.size()); ++i) {
    const std::vector<int>& s = inst.subsets[i];
    if (s.empty()) {
      throw InputError("subset " + std::to_string(i + 1) + " is empty");
    }
    std::set<int> seen;
    for (int e : s) {
      if (e < 1 || e > inst.universe) {
        throw InputError("subset " + std::to_string(i + 1) + " element " +
                         std::to_string(e) + " is outside the universe 1.." +
                         std::to_string(inst.universe));
      }
      if (!seen.insert(e).second) {
        throw InputError("subset " + std::to_string(i + 1) +
                         " repeats element " + std::to_string(e));
      }
    }
  }
}

// The k-th subset of the extended family: explicit subsets first, then the
// singletons {1}, ..., {p}.  1-based k.
std::vector<int> extended_subset(const SetCoverInstance& inst, int k) {
  if (k <= inst.explicit_count()) return inst.subsets[k - 1];
  return {k - inst.explicit_count()};
}

}  // namespace

SetCoverInstance parse_setcover(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::exception& e) {
    throw InputError(std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("p") || !doc.contains("subsets")) {
    throw InputError("set cover document needs the keys \"p\" and \"subsets\"");
  }
  SetCoverInstance inst;
  try {
    inst.universe = doc.at("p").get<int>();
    for (const json& s : doc.at("subsets")) {
      inst.subsets.push_back(s.get<std::vector<int>>());
    }
  } catch (const json::exception& e) {
    throw InputError(std::string("invalid set cover document: ") + e.what());
  }
  for (std::vector<int>& s : inst.subsets) std::sort(s.begin(), s.end());
  validate_instance(inst);
  return inst;
}

SetCoverInstance parse_setcover_file(const std::string& path) {
  return parse_setcover(read_file(path));
}

std::string serialize_setcover(const SetCoverInstance& inst) {
  json doc;
  doc["p"] = inst.universe;
  doc["subsets"] = inst.subsets;
  return doc.dump(2) + "\n";
}

ReductionOutput reduce_setcover(const SetCoverInstance& inst) {
  validate_instance(inst);
  const int p = inst.universe;
  const int q = inst.explicit_count();
  const int size = 2 * p + 3 * q;
  const int states = 2 * p + 2 * q;

  ReductionOutput out;
  out.instance = inst;
  out.matrix.size = size;
  // Free diagonal, one dyad per universe element, and per explicit subset a
  // star wherever it contains the element of a singleton.
  for (int i = 1; i <= size; ++i) out.matrix.stars.emplace_back(i, i);
  for (int i = 1; i <= q; ++i) {
    for (int e : inst.subsets[i - 1]) {
      out.matrix.stars.emplace_back(i + q, 2 * e + 2 * q - 1);
    }
  }
  for (int i = 2 * q + 1; i <= 2 * q + 2 * p - 1; i += 2) {
    out.matrix.pencils.emplace_back(i, i + 1);
    out.matrix.pencils.emplace_back(i + 1, i);
  }
  for (int i = 1; i <= q; ++i) {
    out.matrix.pencils.emplace_back(i, i + q);
    out.matrix.pencils.emplace_back(i + q, i + 2 * q + 2 * p);
  }
  std::sort(out.matrix.stars.begin(), out.matrix.stars.end());
  std::sort(out.matrix.pencils.begin(), out.matrix.pencils.end());

  // Columns carrying the indeterminate move to the row of that entry; the
  // remaining columns (the first q) fill the trailing positions in order.
  out.column_permutation.assign(size + 1, 0);  // 1-based, [0] unused
  for (const auto& [row, col] : out.matrix.pencils) {
    if (out.column_permutation[col] != 0) {
      throw std::logic_error("reduce_setcover: column with two pencils");
    }
    out.column_permutation[col] = row;
  }
  int next_free = states;
  for (int c = 1; c <= size; ++c) {
    if (out.column_permutation[c] == 0) {
      out.column_permutation[c] = ++next_free;
    }
  }
  if (next_free != size) {
    throw std::logic_error("reduce_setcover: permutation is not a bijection");
  }

  out.permuted.size = size;
  for (const auto& [row, col] : out.matrix.stars) {
    out.permuted.stars.emplace_back(row, out.column_permutation[col]);
  }
  for (const auto& [row, col] : out.matrix.pencils) {
    out.permuted.pencils.emplace_back(row, out.column_permutation[col]);
  }
  std::sort(out.permuted.stars.begin(), out.permuted.stars.end());
  std::sort(out.permuted.pencils.begin(), out.permuted.pencils.end());
  for (int i = 0; i < static_cast<int>(out.permuted.pencils.size()); ++i) {
    if (out.permuted.pencils[i] != std::make_pair(i + 1, i + 1)) {
      throw std::logic_error("reduce_setcover: pencils missed the diagonal");
    }
  }

  // Read the permuted matrix as the pencil of a structured system.
  std::vector<std::pair<int, int>> a_entries, b_entries, c_entries;
  for (const auto& [row, col] : out.permuted.stars) {
    if (row <= states && col <= states) {
      a_entries.emplace_back(row, col);
    } else if (row <= states) {
      b_entries.emplace_back(row, col - states);
    } else if (col <= states) {
      c_entries.emplace_back(row - states, col);
    } else {
      throw std::logic_error("reduce_setcover: star in the feedthrough block");
    }
  }
  out.system = StructuredSystem::make(
      states, q, q, SparsityPattern::make(states, states, a_entries, "A"),
      SparsityPattern::make(states, q, b_entries, "B"),
      SparsityPattern::make(q, states, c_entries, "C"),
      SparsityPattern(q, q));

  for (int i = 1; i <= q; ++i) out.subset_states.push_back({i});
  for (int j = 1; j <= p; ++j) {
    out.subset_states.push_back({2 * q + 2 * j - 1, 2 * q + 2 * j});
  }
  return out;
}

std::vector<int> setcover_greedy(const SetCoverInstance& inst) {
  validate_instance(inst);
  const int total = inst.explicit_count() + inst.universe;
  std::set<int> uncovered;
  for (int e = 1; e <= inst.universe; ++e) uncovered.insert(e);
  std::vector<int> chosen;
  while (!uncovered.empty()) {
    int best_k = 0, best_gain = 0;
    for (int k = 1; k <= total; ++k) {
      int gain = 0;
      for (int e : extended_subset(inst, k)) gain += uncovered.count(e);
      if (gain > best_gain) {
        best_gain = gain;
        best_k = k;
      }
    }
    for (int e : extended_subset(inst, best_k)) uncovered.erase(e);
    chosen.push_back(best_k);
  }
  std::sort(chosen.begin(), chosen.end());
  return chosen;
}

std::vector<int> setcover_exact(const SetCoverInstance& inst,
                                int max_subsets) {
  validate_instance(inst);
  const int total = inst.explicit_count() + inst.universe;
  if (total > max_subsets) {
    throw InfeasibleError("exact cover search over " + std::to_string(total) +
                          " subsets exceeds the cap of " +
                          std::to_string(max_subsets));
  }
  for (int k = 1; k <= total; ++k) {
    std::vector<int> pick(k);
    std::iota(pick.begin(), pick.end(), 1);
    for (;;) {
      std::set<int> covered;
      for (int t : pick) {
        for (int e : extended_subset(inst, t)) covered.insert(e);
      }
      if (static_cast<int>(covered.size()) == inst.universe) return pick;
      int i = k - 1;
      while (i >= 0 && pick[i] == total - k + i + 1) --i;
      if (i < 0) break;
      ++pick[i];
      for (int j = i + 1; j < k; ++j) pick[j] = pick[j - 1] + 1;
    }
  }
  throw std::logic_error("setcover_exact: singletons always cover");
}

StructuredSystem gen_random(const GenConfig& cfg) {
  if (cfg.n < 1) throw InputError("n must be at least 1");
  if (cfg.q < 0) throw InputError("q must be nonnegative");
  if (cfg.density < 0.0 || cfg.density > 1.0) {
    throw InputError("density must lie in [0, 1]");
  }
  if (cfg.dedicated && cfg.q > cfg.n) {
    throw InputError("dedicated inputs need q <= n");
  }
  std::mt19937_64 rng(cfg.seed);
  const auto unit = [&rng]() {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
  };

  std::vector<std::pair<int, int>> a_entries;
  for (int i = 1; i <= cfg.n; ++i) {
    for (int j = 1; j <= cfg.n; ++j) {
      if (cfg.self_loops && i == j) {
        a_entries.emplace_back(i, j);
      } else if (unit() < cfg.density) {
        a_entries.emplace_back(i, j);
      }
    }
  }
  SparsityPattern a =
      SparsityPattern::make(cfg.n, cfg.n, std::move(a_entries), "A");

  SparsityPattern b(cfg.n, cfg.q);
  if (cfg.dedicated) {
    std::vector<int> pool(cfg.n);
    std::iota(pool.begin(), pool.end(), 1);
    std::vector<std::pair<int, int>> b_entries;
    for (int j = 0; j < cfg.q; ++j) {
      const int pick =
          j + static_cast<int>(rng() % static_cast<std::uint64_t>(cfg.n - j));
      std::swap(pool[j], pool[pick]);
      b_entries.emplace_back(pool[j], j + 1);
    }
    b = SparsityPattern::make(cfg.n, cfg.q, std::move(b_entries), "B");
  } else {
    constexpr int kMaxDraws = 10000;
    bool ok = false;
    for (int attempt = 0; attempt < kMaxDraws && !ok; ++attempt) {
      std::vector<std::pair<int, int>> b_entries;
      for (int i = 1; i <= cfg.n; ++i) {
        for (int j = 1; j <= cfg.q; ++j) {
          if (unit() < cfg.density) b_entries.emplace_back(i, j);
        }
      }
      b = SparsityPattern::make(cfg.n, cfg.q, std::move(b_entries), "B");
      ok = generic_rank(b) == cfg.q;
    }
    if (!ok) {
      throw InfeasibleError(
          "could not draw an input pattern of full generic rank at this "
          "density");
    }
  }
  return StructuredSystem::make(cfg.n, cfg.q, 0, std::move(a), std::move(b),
                                SparsityPattern(0, cfg.n),
                                SparsityPattern(0, cfg.q));
}

}  // namespace strobs
