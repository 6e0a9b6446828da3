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

#include "quncert_cli/figures.hpp"

#include <fstream>

#include "quncert/toymodel.hpp"
#include "quncert/uncertainty.hpp"
#include "quncert_cli/csv.hpp"
#include "quncert_cli/scenario_file.hpp"

namespace quncert::cli {

namespace {

namespace fs = std::filesystem;

fs::path save(const CsvTable& table, const fs::path& dir, const std::string& stem) {
    const auto path = dir / (stem + ".csv");
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw InputError("cannot write '" + path.string() + "'");
    }
    table.write(out);
    if (!out) {
        throw InputError("write failed for '" + path.string() + "'");
    }
    return path;
}

std::vector<fs::path> energy_projectors(const fs::path& dir) {
    std::vector<fs::path> out;
    for (const char* panel : {"fig1A", "fig1B", "fig1C", "fig1D"}) {
        const auto tr = evolve(qubit_scenario(preset(panel), {"pz_up", "pz_down"}));
        out.push_back(save(trajectory_table(tr), dir, panel));
    }
    return out;
}

std::vector<fs::path> sigma_x_clock(const fs::path& dir) {
    std::vector<fs::path> out;
    for (const char* panel : {"fig2A", "fig2B", "fig2C", "fig2D"}) {
        const auto tr = evolve(qubit_scenario(preset(panel), {"px_up", "px_down", "sx"}));
        auto table = trajectory_table(tr);
        std::vector<std::string> marks(tr.times.size());
        CsvTable ticks;
        ticks.header = {"kind", "t", "sample"};
        try {
            for (const auto& e : tick_tock(tr, "sx").extrema) {
                const char* kind = e.kind == ClockEdge::kTick ? "tick" : "tock";
                marks[e.sample] = kind;
                ticks.rows.push_back({kind, format_real(e.time), std::to_string(e.sample)});
            }
        } catch (const ClockError&) {
            // Static <sx>: nothing to annotate.
        }
        table.add_column("clock", marks);
        out.push_back(save(table, dir, panel));
        if (!ticks.rows.empty()) {
            out.push_back(save(ticks, dir, std::string(panel) + "_ticks"));
        }
    }
    return out;
}

// Panels A and C plot Delta T in units of 1/omega, B and D the product in units of hbar/2.
std::vector<fs::path> mandelstam_tamm(const fs::path& dir) {
    struct Panel {
        const char* stem;
        const char* preset;
        bool product;
    };
    std::vector<fs::path> out;
    for (const Panel& p : {Panel{"fig3A", "fig3AB", false}, Panel{"fig3B", "fig3AB", true},
                           Panel{"fig3C", "fig3CD", false}, Panel{"fig3D", "fig3CD", true}}) {
        const auto q = preset(p.preset);
        const auto s = qubit_scenario(q, {"sx"});
        CsvTable table;
        table.header = {"t", "sx_mean", p.product ? "dE_dT_over_half_hbar" : "dT_times_omega"};
        for (const auto& m : mt_series(pauli(PauliAxis::kX), s)) {
            const double value = p.product ? m.product / (0.5 * q.hbar()) : m.delta_t * q.omega();
            table.rows.push_back(
                {format_real(m.t), format_real(expectation(pauli(PauliAxis::kX), state_at(s, m.t))), format_real(value)});
        }
        out.push_back(save(table, dir, p.stem));
    }
    return out;
}

}  // namespace

std::vector<fs::path> write_figure(const std::string& figure, const fs::path& out_dir) {
    std::error_code ec;
    fs::create_directories(out_dir, ec);
    if (ec) {
        throw InputError("cannot create '" + out_dir.string() + "': " + ec.message());
    }
    if (figure == "fig1") return energy_projectors(out_dir);
    if (figure == "fig2") return sigma_x_clock(out_dir);
    if (figure == "fig3") return mandelstam_tamm(out_dir);
    throw InputError("unknown figure '" + figure + "' (expected fig1, fig2 or fig3)");
}

}  // namespace quncert::cli
