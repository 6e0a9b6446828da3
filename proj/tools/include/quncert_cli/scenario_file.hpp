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

// Scenario documents: JSON with complex numbers as [re, im] pairs.
//
//   {
//     "hbar": 1.0,                                  optional, default 1
//     "hamiltonian": [[[0.5, 0], [0, 0]], [[0, 0], [-0.5, 0]]],
//     "initial_state": [[0.7071067811865476, 0], [0.7071067811865476, 0]],
//     "time": {"start": 0, "stop": 12.566370614359172, "steps": 1000},   optional
//     "observables": {"sx": [[[0, 0], [1, 0]], [[1, 0], [0, 0]]]}        optional
//   }

#ifndef QUNCERT_CLI_SCENARIO_FILE_HPP
#define QUNCERT_CLI_SCENARIO_FILE_HPP

#include <filesystem>
#include <string>
#include <string_view>

#include "quncert/dynamics.hpp"
#include "quncert/error.hpp"

namespace quncert::cli {

/// Malformed or invalid user input; maps to exit status 2.
class InputError : public Error {
public:
    using Error::Error;
};

/// Parses a scenario document. Errors carry "<source>:<line>:<col>" context
/// and, for matrices, the offending entry.
Scenario parse_scenario(std::string_view text, const std::string& source_name);

struct LoadedScenario {
    Scenario scenario;
    /// Exact bytes of the file, or "preset:<name>" for built-in presets.
    std::string identity;
    std::string label;
};

/// Reads `source` as a file path; when no such file exists and `source` names a
/// qubit preset (fig1A, ..., fig3CD), builds that preset with the sx, sy,
/// sz, px_up, px_down, pz_up and pz_down observables.
LoadedScenario load_scenario(const std::string& source);

std::string read_file(const std::filesystem::path& path);

}  // namespace quncert::cli

#endif  // QUNCERT_CLI_SCENARIO_FILE_HPP
