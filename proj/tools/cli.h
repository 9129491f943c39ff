// Copyright 2026 The gconn Authors
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

// Command-line driver: kappa, construct, verify and bounds subcommands.

#ifndef GCONN_TOOLS_CLI_H_
#define GCONN_TOOLS_CLI_H_

#include <iosfwd>

namespace gconn::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitVerification = 2;
inline constexpr int kExitBudget = 3;
inline constexpr int kExitInput = 4;

// Runs one invocation. Normal output goes to `out`, diagnostics to `err`.
int Run(int argc, const char* const* argv, std::ostream& out,
        std::ostream& err);

}  // namespace gconn::cli

#endif  // GCONN_TOOLS_CLI_H_
