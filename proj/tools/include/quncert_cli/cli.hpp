// Copyright 2026 The quncert Authors
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

// Entry point of the quncert command-line tool, callable in-process.

#ifndef QUNCERT_CLI_CLI_HPP
#define QUNCERT_CLI_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace quncert::cli {

inline constexpr int kExitPass = 0;
inline constexpr int kExitCheckFailure = 1;
inline constexpr int kExitInputError = 2;
inline constexpr int kExitInconclusive = 3;

inline constexpr unsigned long long kDefaultSeed = 42;
inline constexpr const char* kSeedEnvVar = "QUNCERT_SEED";

/// `args` excludes the program name. Returns the process exit status.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

const char* version();

}  // namespace quncert::cli

#endif  // QUNCERT_CLI_CLI_HPP
