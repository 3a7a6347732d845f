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

#ifndef STROBS_CLI_HPP_
#define STROBS_CLI_HPP_

#include <iosfwd>

namespace strobs {

// Runs the command-line interface against the given streams and returns the
// process exit code:
//   0  analysis completed (whatever the verdict)
//   2  bad usage or bad input
//   3  refused: infeasible request or enumeration cap exceeded
//   4  internal error (an invariant the theory guarantees was violated)
int run_cli(int argc, const char* const* argv, std::ostream& out,
            std::ostream& err);

}  // namespace strobs

#endif  // STROBS_CLI_HPP_
