// Copyright 2026 The Arena Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef ARENA_CLI_COMMANDS_HPP_
#define ARENA_CLI_COMMANDS_HPP_

#include <ostream>
#include <string>
#include <vector>

namespace arena::cli {

// Process exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitFailed = 1;      // gadget not verified, bound violated
inline constexpr int kExitInvalid = 2;     // bad input or usage
inline constexpr int kExitCapExceeded = 3; // enumeration cap, strict non-convergence

// Runs one CLI invocation. args[0] is the program name. Machine-readable
// JSON goes to `out`, human-readable tables and diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace arena::cli

#endif  // ARENA_CLI_COMMANDS_HPP_
