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

#ifndef QUNCERT_CLI_CSV_HPP
#define QUNCERT_CLI_CSV_HPP

#include <iosfwd>
#include <string>
#include <vector>

#include "quncert/dynamics.hpp"

namespace quncert::cli {

/// 17 significant digits in scientific notation; "inf"/"-inf"/"nan" for
/// non-finite values. Round-trips through strtod.
std::string format_real(double x);

struct CsvTable {
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;

    void add_column(std::string name, const std::vector<std::string>& values);
    void write(std::ostream& os) const;
};

/// t, <name>_mean, <name>_std per observable, energy_mean, energy_std,
/// coherence, predictability.
CsvTable trajectory_table(const Trajectory& tr);

/// Minimal reader for the tables written above (no quoting).
CsvTable read_csv(std::istream& is);

}  // namespace quncert::cli

#endif  // QUNCERT_CLI_CSV_HPP
