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

// Verification report: a flat list of checks with an overall verdict.

#ifndef QUNCERT_CLI_REPORT_HPP
#define QUNCERT_CLI_REPORT_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace quncert::cli {

enum class Verdict { kPass, kFail, kInconclusive };

const char* to_string(Verdict v);

struct Check {
    std::string name;
    double lhs = 0.0;
    double rhs = 0.0;
    /// Positive or zero when the relation holds with margin.
    double slack = 0.0;
    /// ">=", "<=", "<" or "==" (the latter for flag comparisons).
    std::string relation;
    Verdict verdict = Verdict::kFail;
    std::string detail;

    /// lhs >= rhs, passing when lhs - rhs >= -tol.
    static Check at_least(std::string name, double lhs, double rhs, double tol = 1e-10);
    /// lhs <= rhs.
    static Check at_most(std::string name, double lhs, double rhs);
    /// lhs < rhs, for fixed absolute thresholds.
    static Check below(std::string name, double lhs, double rhs);
    /// |value - target| <= tol, reported as lhs = |value - target|, rhs = tol.
    static Check near(std::string name, double value, double target, double tol);
    /// Exact equality, meant for +infinity flags.
    static Check equal(std::string name, double lhs, double rhs);
    static Check inconclusive(std::string name, std::string detail);
};

struct Report {
    std::string suite;
    unsigned long long seed = 0;
    std::string scenario;
    std::string input_digest;
    std::vector<Check> checks;

    Verdict overall() const;
    int exit_status() const;
    /// Deterministic JSON; non-finite numbers are written as strings.
    std::string to_json() const;
};

/// Lowercase hex SHA-256.
std::string sha256_hex(const std::string& bytes);

}  // namespace quncert::cli

#endif  // QUNCERT_CLI_REPORT_HPP
