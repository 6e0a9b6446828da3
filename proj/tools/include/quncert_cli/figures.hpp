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

#ifndef QUNCERT_CLI_FIGURES_HPP
#define QUNCERT_CLI_FIGURES_HPP

#include <filesystem>
#include <string>
#include <vector>

namespace quncert::cli {

/// Writes the figure's panel CSVs into `out_dir` (created if missing) and
/// returns the paths written. Throws InputError for an unknown figure.
std::vector<std::filesystem::path> write_figure(const std::string& figure, const std::filesystem::path& out_dir);

}  // namespace quncert::cli

#endif  // QUNCERT_CLI_FIGURES_HPP
