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

#include "quncert_cli/csv.hpp"

#include <cmath>
#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>

#include "quncert_cli/scenario_file.hpp"

namespace quncert::cli {

std::string format_real(double x) {
    if (std::isnan(x)) {
        return "nan";
    }
    if (std::isinf(x)) {
        return x > 0 ? "inf" : "-inf";
    }
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.16e", x);
    return buf;
}

void CsvTable::add_column(std::string name, const std::vector<std::string>& values) {
    if (values.size() != rows.size()) {
        throw InputError("csv: column '" + name + "' has " + std::to_string(values.size()) + " values for " +
                         std::to_string(rows.size()) + " rows");
    }
    header.push_back(std::move(name));
    for (std::size_t i = 0; i < rows.size(); ++i) {
        rows[i].push_back(values[i]);
    }
}

void CsvTable::write(std::ostream& os) const {
    auto line = [&os](const std::vector<std::string>& cells) {
        for (std::size_t i = 0; i < cells.size(); ++i) {
            if (i) os << ',';
            os << cells[i];
        }
        os << '\n';
    };
    line(header);
    for (const auto& r : rows) {
        line(r);
    }
}

CsvTable trajectory_table(const Trajectory& tr) {
    CsvTable t;
    t.header.push_back("t");
    for (const auto& s : tr.series) {
        t.header.push_back(s.name + "_mean");
        t.header.push_back(s.name + "_std");
    }
    for (const char* h : {"energy_mean", "energy_std", "coherence", "predictability"}) {
        t.header.emplace_back(h);
    }
    t.rows.reserve(tr.times.size());
    for (std::size_t i = 0; i < tr.times.size(); ++i) {
        std::vector<std::string> row;
        row.reserve(t.header.size());
        row.push_back(format_real(tr.times[i]));
        for (const auto& s : tr.series) {
            row.push_back(format_real(s.samples[i].mean));
            row.push_back(format_real(s.samples[i].stddev));
        }
        row.push_back(format_real(tr.energy[i].mean));
        row.push_back(format_real(tr.energy[i].stddev));
        row.push_back(format_real(tr.coherence[i].coherence));
        row.push_back(format_real(tr.coherence[i].predictability));
        t.rows.push_back(std::move(row));
    }
    return t;
}

CsvTable read_csv(std::istream& is) {
    auto split = [](const std::string& line) {
        std::vector<std::string> cells;
        std::stringstream ss(line);
        std::string cell;
        while (std::getline(ss, cell, ',')) {
            cells.push_back(cell);
        }
        if (!line.empty() && line.back() == ',') {
            cells.emplace_back();
        }
        return cells;
    };
    CsvTable t;
    std::string line;
    if (!std::getline(is, line)) {
        throw InputError("csv: empty input");
    }
    t.header = split(line);
    while (std::getline(is, line)) {
        auto cells = split(line);
        if (cells.size() != t.header.size()) {
            throw InputError("csv: row " + std::to_string(t.rows.size() + 1) + " has " + std::to_string(cells.size()) +
                             " cells, header has " + std::to_string(t.header.size()));
        }
        t.rows.push_back(std::move(cells));
    }
    return t;
}

}  // namespace quncert::cli
