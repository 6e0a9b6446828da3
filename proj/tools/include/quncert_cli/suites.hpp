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

#ifndef QUNCERT_CLI_SUITES_HPP
#define QUNCERT_CLI_SUITES_HPP

#include <optional>
#include <string>
#include <vector>

#include "quncert/dynamics.hpp"
#include "quncert_cli/report.hpp"

namespace quncert::cli {

struct SuiteContext {
    /// Absent: the suite runs on its built-in qubit presets (and seeded
    /// random scenarios where applicable).
    std::optional<Scenario> scenario;
    std::string scenario_label;
    unsigned long long seed = 42;
};

/// conservation, offset, ehrenfest, robertson, schrodinger, mt, ml, qsl, all
const std::vector<std::string>& suite_names();

/// Throws InputError for an unknown suite name.
std::vector<Check> run_suite(const std::string& suite, const SuiteContext& ctx);

}  // namespace quncert::cli

#endif  // QUNCERT_CLI_SUITES_HPP
