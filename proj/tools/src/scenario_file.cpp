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

#include "quncert_cli/scenario_file.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <nlohmann/json.hpp>
#include <optional>
#include <sstream>

#include "quncert/toymodel.hpp"

namespace quncert::cli {

namespace {

using Json = nlohmann::ordered_json;

struct Position {
    std::size_t line = 1;
    std::size_t column = 1;
};

Position position_of(std::string_view text, std::size_t offset) {
    Position p;
    offset = std::min(offset, text.size());
    for (std::size_t i = 0; i < offset; ++i) {
        if (text[i] == '\n') {
            ++p.line;
            p.column = 1;
        } else {
            ++p.column;
        }
    }
    return p;
}

std::string line_text(std::string_view text, std::size_t line) {
    std::size_t begin = 0;
    for (std::size_t l = 1; l < line; ++l) {
        begin = text.find('\n', begin);
        if (begin == std::string_view::npos) {
            return {};
        }
        ++begin;
    }
    const auto end = text.find('\n', begin);
    return std::string(text.substr(begin, end == std::string_view::npos ? end : end - begin));
}

// Semantic errors point at the first occurrence of the key in the document.
class Locator {
public:
    Locator(std::string_view text, std::string source) : text_(text), source_(std::move(source)) {}

    [[noreturn]] void fail(const std::string& key, const std::string& message) const {
        std::ostringstream os;
        os << source_;
        const auto at = key.empty() ? std::string_view::npos : text_.find("\"" + key + "\"");
        if (at != std::string_view::npos) {
            const auto p = position_of(text_, at);
            os << ":" << p.line << ":" << p.column << ": " << message << "\n    " << line_text(text_, p.line);
        } else {
            os << ": " << message;
        }
        throw InputError(os.str());
    }

    [[noreturn]] void parse_fail(std::size_t byte, const std::string& message) const {
        // nlohmann reports the 1-based count of bytes read, i.e. one past the culprit.
        const auto p = position_of(text_, byte == 0 ? 0 : byte - 1);
        std::ostringstream os;
        os << source_ << ":" << p.line << ":" << p.column << ": " << message << "\n    " << line_text(text_, p.line);
        throw InputError(os.str());
    }

private:
    std::string_view text_;
    std::string source_;
};

double real_of(const Json& j, const Locator& loc, const std::string& key, const std::string& where) {
    if (!j.is_number()) {
        loc.fail(key, where + ": expected a number, got " + std::string(j.type_name()));
    }
    const double v = j.get<double>();
    if (!std::isfinite(v)) {
        loc.fail(key, where + ": non-finite value");
    }
    return v;
}

Complex complex_of(const Json& j, const Locator& loc, const std::string& key, const std::string& where) {
    if (!j.is_array() || j.size() != 2) {
        loc.fail(key, where + ": complex numbers are written as [re, im]");
    }
    return {real_of(j[0], loc, key, where + ".re"), real_of(j[1], loc, key, where + ".im")};
}

ComplexMatrix matrix_of(const Json& j, const Locator& loc, const std::string& key) {
    if (!j.is_array() || j.empty()) {
        loc.fail(key, key + ": expected a non-empty n x n array of [re, im] pairs");
    }
    const std::size_t n = j.size();
    ComplexMatrix m(n);
    for (std::size_t r = 0; r < n; ++r) {
        if (!j[r].is_array() || j[r].size() != n) {
            loc.fail(key, key + ": row " + std::to_string(r) + " must have " + std::to_string(n) + " entries");
        }
        for (std::size_t c = 0; c < n; ++c) {
            m(r, c) = complex_of(j[r][c], loc, key, key + "[" + std::to_string(r) + "][" + std::to_string(c) + "]");
        }
    }
    return m;
}

HermitianObservable observable_of(const Json& j, const Locator& loc, const std::string& key) {
    auto m = matrix_of(j, loc, key);
    try {
        return HermitianObservable(std::move(m));
    } catch (const DomainError& e) {
        loc.fail(key, key + ": " + e.what());
    }
}

}  // namespace

Scenario parse_scenario(std::string_view text, const std::string& source_name) {
    const Locator loc(text, source_name);
    Json doc;
    try {
        doc = Json::parse(text.begin(), text.end());
    } catch (const Json::parse_error& e) {
        std::string message = e.what();
        // Drop the library's "[json.exception.parse_error.101] parse error at line 1, column 2: " prefix.
        if (const auto colon = message.find(": "); colon != std::string::npos) {
            message = message.substr(colon + 2);
        }
        loc.parse_fail(e.byte, "syntax error: " + message);
    }
    if (!doc.is_object()) {
        loc.fail("", "top level must be an object");
    }
    for (const auto& [key, value] : doc.items()) {
        if (key != "hbar" && key != "hamiltonian" && key != "initial_state" && key != "time" &&
            key != "observables") {
            loc.fail(key, "unknown key '" + key + "'");
        }
    }

    double hbar = 1.0;
    if (doc.contains("hbar")) {
        hbar = real_of(doc["hbar"], loc, "hbar", "hbar");
        if (!(hbar > 0.0)) {
            loc.fail("hbar", "hbar must be positive");
        }
    }
    if (!doc.contains("hamiltonian")) {
        loc.fail("", "missing required key 'hamiltonian'");
    }
    if (!doc.contains("initial_state")) {
        loc.fail("", "missing required key 'initial_state'");
    }
    auto h = observable_of(doc["hamiltonian"], loc, "hamiltonian");

    const Json& psi_json = doc["initial_state"];
    if (!psi_json.is_array()) {
        loc.fail("initial_state", "initial_state: expected an array of [re, im] pairs");
    }
    ComplexVector amps;
    for (std::size_t i = 0; i < psi_json.size(); ++i) {
        amps.push_back(complex_of(psi_json[i], loc, "initial_state", "initial_state[" + std::to_string(i) + "]"));
    }
    if (amps.size() != h.dim()) {
        loc.fail("initial_state", "initial_state has " + std::to_string(amps.size()) +
                                      " amplitudes but the hamiltonian is " + std::to_string(h.dim()) + "x" +
                                      std::to_string(h.dim()));
    }
    std::optional<QuantumState> psi;
    try {
        psi.emplace(std::move(amps));
    } catch (const DomainError& e) {
        loc.fail("initial_state", std::string("initial_state: ") + e.what());
    }

    std::vector<NamedObservable> observables;
    if (doc.contains("observables")) {
        const Json& obs = doc["observables"];
        if (!obs.is_object()) {
            loc.fail("observables", "observables: expected an object mapping names to matrices");
        }
        for (const auto& [name, matrix] : obs.items()) {
            auto a = observable_of(matrix, loc, name);
            if (a.dim() != h.dim()) {
                loc.fail(name, "observable '" + name + "' is " + std::to_string(a.dim()) +
                                   "-dimensional, hamiltonian is " + std::to_string(h.dim()));
            }
            observables.emplace_back(name, std::move(a));
        }
    }

    try {
        if (doc.contains("time")) {
            const Json& t = doc["time"];
            if (!t.is_object() || !t.contains("start") || !t.contains("stop") || !t.contains("steps")) {
                loc.fail("time", "time: expected {\"start\": .., \"stop\": .., \"steps\": ..}");
            }
            if (!t["steps"].is_number_integer()) {
                loc.fail("time", "time.steps must be an integer");
            }
            const TimeGrid grid{real_of(t["start"], loc, "time", "time.start"),
                                real_of(t["stop"], loc, "time", "time.stop"), t["steps"].get<int>()};
            return Scenario(hbar, std::move(h), std::move(*psi), grid, std::move(observables));
        }
        return Scenario(hbar, std::move(h), std::move(*psi), std::move(observables));
    } catch (const InputError&) {
        throw;
    } catch (const Error& e) {
        const std::string message = e.what();
        loc.fail(message.find("time grid") != std::string::npos ? "time" : "", message);
    }
}

std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw InputError("cannot open '" + path.string() + "'");
    }
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

LoadedScenario load_scenario(const std::string& source) {
    std::error_code ec;
    if (!std::filesystem::exists(source, ec)) {
        const auto& names = preset_names();
        if (std::find(names.begin(), names.end(), source) != names.end()) {
            return {qubit_scenario(preset(source), {"sx", "sy", "sz", "px_up", "px_down", "pz_up", "pz_down"}),
                    "preset:" + source, source};
        }
        throw InputError("no such scenario file or preset: '" + source + "'");
    }
    auto text = read_file(source);
    auto scenario = parse_scenario(text, source);
    return {std::move(scenario), std::move(text), source};
}

}  // namespace quncert::cli
