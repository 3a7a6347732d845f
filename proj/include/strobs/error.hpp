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

#ifndef STROBS_ERROR_HPP_
#define STROBS_ERROR_HPP_

#include <stdexcept>
#include <string>

namespace strobs {

// Malformed or inconsistent user input (bad JSON, out-of-range indices,
// duplicate entries, dimension mismatches).  The CLI maps this to exit code 2.
class InputError : public std::runtime_error {
 public:
  explicit InputError(const std::string& what) : std::runtime_error(what) {}
};

// A requested computation has no answer (no feasible placement, a violated
// precondition of a solver, or a search cap that refuses an oversized
// instance).  The CLI maps this to exit code 3.
class InfeasibleError : public std::runtime_error {
 public:
  explicit InfeasibleError(const std::string& what)
      : std::runtime_error(what) {}
};

}  // namespace strobs

#endif  // STROBS_ERROR_HPP_
