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

#ifndef STROBS_PATTERN_HPP_
#define STROBS_PATTERN_HPP_

#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

namespace strobs {

// A zero/nonzero sparsity pattern of a structured matrix.  Entries are
// 1-based (row, column) pairs, kept sorted row-major and duplicate-free.
// Only the positions matter; the nonzero values are free parameters.
class SparsityPattern {
 public:
  SparsityPattern() = default;
  SparsityPattern(int rows, int cols) : rows_(rows), cols_(cols) {}

  // Validates bounds and rejects duplicates.  `name` labels error messages
  // (e.g. "A").  Entries may arrive in any order; they are stored sorted.
  static SparsityPattern make(int rows, int cols,
                              std::vector<std::pair<int, int>> entries,
                              const std::string& name);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  int nnz() const { return static_cast<int>(entries_.size()); }
  bool empty() const { return entries_.empty(); }

  // Sorted row-major list of 1-based (row, col) positions.
  const std::vector<std::pair<int, int>>& entries() const { return entries_; }

  bool has(int row, int col) const;

  // Adds one entry, keeping order; rejects duplicates and range violations.
  void insert(int row, int col);

  // 1-based rows per column / columns per row, each list ascending.
  std::vector<std::vector<int>> rows_by_column() const;
  std::vector<std::vector<int>> cols_by_row() const;

  bool operator==(const SparsityPattern& other) const = default;

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<std::pair<int, int>> entries_;
};

// Which axis of a pattern must consist of dedicated lines.
enum class Axis { kColumns, kRows };

// True when every line along `axis` has exactly one nonzero and no two lines
// share the orthogonal index.  A column-dedicated B means every input drives
// exactly one state and no state is driven twice; a row-dedicated C means
// every sensor measures exactly one state and no state is measured twice.
bool is_dedicated(const SparsityPattern& m, Axis axis);

// A structured linear system
//   dx/dt = A x + B u,   y = C x + D u
// with n states, q unknown inputs and m outputs; only sparsity is known.
struct StructuredSystem {
  int n = 0;
  int q = 0;
  int m = 0;
  SparsityPattern a;  // n x n
  SparsityPattern b;  // n x q
  SparsityPattern c;  // m x n
  SparsityPattern d;  // m x q, all-zero unless sensors measure inputs

  static StructuredSystem make(int n, int q, int m, SparsityPattern a,
                               SparsityPattern b, SparsityPattern c,
                               SparsityPattern d);
};

// Role of a sensor within a placement.  Two-phase solvers tag the rank-fixing
// phase `kStage1` and the component-resolving phase `kStage2`; one-shot
// solvers tag everything `kStage1`; supplementary sensors beyond a solver's
// primary phase are `kExtra`.
enum class SensorStage { kStage1, kStage2, kExtra };

const char* to_string(SensorStage stage);

struct Sensor {
  int index = 0;               // 1-based state or input index
  bool measures_input = false; // false: row of C, true: row of D
  SensorStage stage = SensorStage::kStage1;

  bool operator==(const Sensor& other) const = default;
};

// A dedicated sensor placement: each sensor measures one state or one input.
class PlacementResult {
 public:
  void add(int index, bool measures_input, SensorStage stage);
  bool measures_state(int state) const;
  bool measures_input(int input) const;

  const std::vector<Sensor>& sensors() const { return sensors_; }
  std::vector<int> measured_states() const;   // ascending
  std::vector<int> measured_inputs() const;   // ascending
  std::vector<int> states_with_stage(SensorStage stage) const;
  std::vector<int> inputs_with_stage(SensorStage stage) const;
  int total() const { return static_cast<int>(sensors_.size()); }

 private:
  std::vector<Sensor> sensors_;
};

// Builds the dedicated output patterns (C, D) realizing a placement: one row
// per sensor, state-measuring rows first ordered by ascending state index,
// then input-measuring rows by ascending input index.
std::pair<SparsityPattern, SparsityPattern> build_output_pattern(
    int n, int q, const PlacementResult& placement);

// Convenience: the system (a, b) observed through `placement`.
StructuredSystem with_placement(const SparsityPattern& a,
                                const SparsityPattern& b,
                                const PlacementResult& placement);

// JSON round-trip.  The document is an object
//   {"n": int, "q": int, "m": int,
//    "A": [[r, c], ...], "B": [[r, c], ...], "C": [[r, c], ...],
//    "D": [[r, c], ...]}       (D optional, defaults to all-zero)
// Unknown keys are ignored; duplicate entries are a hard error.
StructuredSystem parse_system(const std::string& text);
StructuredSystem parse_system_file(const std::string& path);
std::string serialize_system(const StructuredSystem& sys);

}  // namespace strobs

#endif  // STROBS_PATTERN_HPP_
