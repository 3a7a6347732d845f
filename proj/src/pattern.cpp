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

#include "strobs/pattern.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "strobs/error.hpp"

namespace strobs {

using nlohmann::json;

// ---------------------------------------------------------------------------
// SparsityPattern
// ---------------------------------------------------------------------------

SparsityPattern SparsityPattern::make(int rows, int cols,
                                      std::vector<std::pair<int, int>> entries,
                                      const std::string& name) {
  if (rows < 0 || cols < 0) {
    throw InputError(name + ": negative dimension");
  }
  SparsityPattern p(rows, cols);
  for (std::size_t i = 0; i < entries.size(); ++i) {
    const auto [r, c] = entries[i];
    if (r < 1 || r > rows || c < 1 || c > cols) {
      std::ostringstream msg;
      msg << name << " entry " << (i + 1) << " = (" << r << ", " << c
          << ") is outside the " << rows << "x" << cols << " pattern";
      throw InputError(msg.str());
    }
  }
  std::sort(entries.begin(), entries.end());
  const auto dup = std::adjacent_find(entries.begin(), entries.end());
  if (dup != entries.end()) {
    std::ostringstream msg;
    msg << name << ": duplicate entry (" << dup->first << ", " << dup->second
        << ")";
    throw InputError(msg.str());
  }
  p.entries_ = std::move(entries);
  return p;
}

bool SparsityPattern::has(int row, int col) const {
  return std::binary_search(entries_.begin(), entries_.end(),
                            std::make_pair(row, col));
}

void SparsityPattern::insert(int row, int col) {
  if (row < 1 || row > rows_ || col < 1 || col > cols_) {
    std::ostringstream msg;
    msg << "entry (" << row << ", " << col << ") is outside the " << rows_
        << "x" << cols_ << " pattern";
    throw InputError(msg.str());
  }
  const auto pos = std::lower_bound(entries_.begin(), entries_.end(),
                                    std::make_pair(row, col));
  if (pos != entries_.end() && *pos == std::make_pair(row, col)) {
    std::ostringstream msg;
    msg << "duplicate entry (" << row << ", " << col << ")";
    throw InputError(msg.str());
  }
  entries_.insert(pos, {row, col});
}

std::vector<std::vector<int>> SparsityPattern::rows_by_column() const {
  std::vector<std::vector<int>> out(cols_);
  for (const auto& [r, c] : entries_) out[c - 1].push_back(r);
  for (auto& list : out) std::sort(list.begin(), list.end());
  return out;
}

std::vector<std::vector<int>> SparsityPattern::cols_by_row() const {
  std::vector<std::vector<int>> out(rows_);
  for (const auto& [r, c] : entries_) out[r - 1].push_back(c);
  return out;  // already ascending: entries are sorted row-major
}

bool is_dedicated(const SparsityPattern& m, Axis axis) {
  const int lines = axis == Axis::kColumns ? m.cols() : m.rows();
  if (m.nnz() != lines) return false;
  std::vector<int> per_line(lines, 0);
  std::vector<char> seen_orthogonal(
      axis == Axis::kColumns ? m.rows() : m.cols(), 0);
  for (const auto& [r, c] : m.entries()) {
    const int line = axis == Axis::kColumns ? c : r;
    const int orth = axis == Axis::kColumns ? r : c;
    if (++per_line[line - 1] > 1) return false;
    if (seen_orthogonal[orth - 1]) return false;
    seen_orthogonal[orth - 1] = 1;
  }
  return true;
}

// ---------------------------------------------------------------------------
// StructuredSystem
// ---------------------------------------------------------------------------

namespace {

void check_shape(const SparsityPattern& p, int rows, int cols,
                 const std::string& name) {
  if (p.rows() != rows || p.cols() != cols) {
    std::ostringstream msg;
    msg << name << " must be " << rows << "x" << cols << ", got " << p.rows()
        << "x" << p.cols();
    throw InputError(msg.str());
  }
}

}  // namespace

StructuredSystem StructuredSystem::make(int n, int q, int m, SparsityPattern a,
                                        SparsityPattern b, SparsityPattern c,
                                        SparsityPattern d) {
  if (n < 0 || q < 0 || m < 0) {
    throw InputError("system dimensions must be non-negative");
  }
  check_shape(a, n, n, "A");
  check_shape(b, n, q, "B");
  check_shape(c, m, n, "C");
  check_shape(d, m, q, "D");
  return StructuredSystem{n, q, m, std::move(a), std::move(b), std::move(c),
                          std::move(d)};
}

// ---------------------------------------------------------------------------
// PlacementResult
// ---------------------------------------------------------------------------

const char* to_string(SensorStage stage) {
  switch (stage) {
    case SensorStage::kStage1: return "stage1";
    case SensorStage::kStage2: return "stage2";
    case SensorStage::kExtra: return "extra";
  }
  return "?";
}

void PlacementResult::add(int index, bool measures_input, SensorStage stage) {
  for (const Sensor& s : sensors_) {
    if (s.index == index && s.measures_input == measures_input) {
      std::ostringstream msg;
      msg << "placement already measures " << (measures_input ? "input " : "state ")
          << index;
      throw InputError(msg.str());
    }
  }
  sensors_.push_back(Sensor{index, measures_input, stage});
}

bool PlacementResult::measures_state(int state) const {
  for (const Sensor& s : sensors_) {
    if (!s.measures_input && s.index == state) return true;
  }
  return false;
}

bool PlacementResult::measures_input(int input) const {
  for (const Sensor& s : sensors_) {
    if (s.measures_input && s.index == input) return true;
  }
  return false;
}

namespace {

std::vector<int> collect(const std::vector<Sensor>& sensors, bool inputs,
                         const SensorStage* stage) {
  std::vector<int> out;
  for (const Sensor& s : sensors) {
    if (s.measures_input == inputs && (stage == nullptr || s.stage == *stage)) {
      out.push_back(s.index);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

std::vector<int> PlacementResult::measured_states() const {
  return collect(sensors_, false, nullptr);
}

std::vector<int> PlacementResult::measured_inputs() const {
  return collect(sensors_, true, nullptr);
}

std::vector<int> PlacementResult::states_with_stage(SensorStage stage) const {
  return collect(sensors_, false, &stage);
}

std::vector<int> PlacementResult::inputs_with_stage(SensorStage stage) const {
  return collect(sensors_, true, &stage);
}

std::pair<SparsityPattern, SparsityPattern> build_output_pattern(
    int n, int q, const PlacementResult& placement) {
  const std::vector<int> states = placement.measured_states();
  const std::vector<int> inputs = placement.measured_inputs();
  for (int s : states) {
    if (s < 1 || s > n) {
      throw InputError("placement measures state " + std::to_string(s) +
                       " outside 1.." + std::to_string(n));
    }
  }
  for (int u : inputs) {
    if (u < 1 || u > q) {
      throw InputError("placement measures input " + std::to_string(u) +
                       " outside 1.." + std::to_string(q));
    }
  }
  const int m = static_cast<int>(states.size() + inputs.size());
  SparsityPattern c(m, n);
  SparsityPattern d(m, q);
  int row = 1;
  for (int s : states) c.insert(row++, s);
  for (int u : inputs) d.insert(row++, u);
  return {std::move(c), std::move(d)};
}

StructuredSystem with_placement(const SparsityPattern& a,
                                const SparsityPattern& b,
                                const PlacementResult& placement) {
  const int n = a.rows();
  const int q = b.cols();
  auto [c, d] = build_output_pattern(n, q, placement);
  const int m = c.rows();
  return StructuredSystem::make(n, q, m, a, b, std::move(c), std::move(d));
}

// ---------------------------------------------------------------------------
// JSON round-trip
// ---------------------------------------------------------------------------

namespace {

int get_dim(const json& doc, const char* key) {
  if (!doc.contains(key)) {
    throw InputError(std::string("missing field \"") + key + "\"");
  }
  const json& v = doc.at(key);
  if (!v.is_number_integer() || v.get<long long>() < 0) {
    throw InputError(std::string("field \"") + key +
                     "\" must be a non-negative integer");
  }
  return v.get<int>();
}

std::vector<std::pair<int, int>> get_entries(const json& doc, const char* key,
                                             bool required) {
  std::vector<std::pair<int, int>> out;
  if (!doc.contains(key)) {
    if (required) {
      throw InputError(std::string("missing field \"") + key + "\"");
    }
    return out;
  }
  const json& list = doc.at(key);
  if (!list.is_array()) {
    throw InputError(std::string("field \"") + key +
                     "\" must be an array of [row, col] pairs");
  }
  for (std::size_t i = 0; i < list.size(); ++i) {
    const json& pair = list[i];
    if (!pair.is_array() || pair.size() != 2 ||
        !pair[0].is_number_integer() || !pair[1].is_number_integer()) {
      std::ostringstream msg;
      msg << key << " entry " << (i + 1) << " must be a [row, col] pair";
      throw InputError(msg.str());
    }
    out.emplace_back(pair[0].get<int>(), pair[1].get<int>());
  }
  return out;
}

}  // namespace

StructuredSystem parse_system(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw InputError(std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw InputError("top-level JSON value must be an object");
  const int n = get_dim(doc, "n");
  const int q = get_dim(doc, "q");
  const int m = get_dim(doc, "m");
  SparsityPattern a =
      SparsityPattern::make(n, n, get_entries(doc, "A", true), "A");
  SparsityPattern b =
      SparsityPattern::make(n, q, get_entries(doc, "B", true), "B");
  SparsityPattern c =
      SparsityPattern::make(m, n, get_entries(doc, "C", true), "C");
  SparsityPattern d =
      SparsityPattern::make(m, q, get_entries(doc, "D", false), "D");
  return StructuredSystem::make(n, q, m, std::move(a), std::move(b),
                                std::move(c), std::move(d));
}

StructuredSystem parse_system_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_system(buf.str());
}

namespace {

json entries_to_json(const SparsityPattern& p) {
  json list = json::array();
  for (const auto& [r, c] : p.entries()) list.push_back(json::array({r, c}));
  return list;
}

}  // namespace

std::string serialize_system(const StructuredSystem& sys) {
  json doc;
  doc["n"] = sys.n;
  doc["q"] = sys.q;
  doc["m"] = sys.m;
  doc["A"] = entries_to_json(sys.a);
  doc["B"] = entries_to_json(sys.b);
  doc["C"] = entries_to_json(sys.c);
  doc["D"] = entries_to_json(sys.d);
  return doc.dump(2);
}

}  // namespace strobs
