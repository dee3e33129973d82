// Copyright 2026 The localsym Authors.
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

// The localsym command line.
//
// Exit codes:
//   0  success; for pair and global, the answer is "symmetric"
//   1  pair or global answered "asymmetric"
//   2  usage, input or config error
//   3  canonicalization budget exhausted; output is partial or "undecided"
//   130  experiment interrupted; rows finished so far are written

#ifndef LOCALSYM_CLI_COMMANDS_HPP_
#define LOCALSYM_CLI_COMMANDS_HPP_

#include <atomic>
#include <ostream>

namespace localsym::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitNegative = 1;
inline constexpr int kExitInputError = 2;
inline constexpr int kExitUndecided = 3;
inline constexpr int kExitInterrupted = 130;

// Raised from a signal handler to stop a running experiment.
std::atomic<bool>& InterruptFlag();

// Data goes to `out`, diagnostics to `err`.
int RunCli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace localsym::cli

#endif  // LOCALSYM_CLI_COMMANDS_HPP_
