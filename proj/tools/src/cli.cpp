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

#include "quncert_cli/cli.hpp"

#include <CLI11.hpp>
#include <charconv>
#include <cstdlib>
#include <fstream>
#include <optional>
#include <ostream>

#include "quncert_cli/csv.hpp"
#include "quncert_cli/figures.hpp"
#include "quncert_cli/report.hpp"
#include "quncert_cli/scenario_file.hpp"
#include "quncert_cli/suites.hpp"

namespace quncert::cli {

namespace {

unsigned long long parse_seed(const std::string& text, const std::string& origin) {
    unsigned long long value = 0;
    const auto* end = text.data() + text.size();
    const auto [ptr, ec] = std::from_chars(text.data(), end, value);
    if (text.empty() || ec != std::errc() || ptr != end) {
        throw InputError(origin + ": '" + text + "' is not a non-negative integer seed");
    }
    return value;
}

unsigned long long resolve_seed(const std::optional<std::string>& flag) {
    if (flag) {
        return parse_seed(*flag, "--seed");
    }
    if (const char* env = std::getenv(kSeedEnvVar)) {
        return parse_seed(env, kSeedEnvVar);
    }
    return kDefaultSeed;
}

void write_output(const std::string& path, const std::function<void(std::ostream&)>& emit, std::ostream& fallback) {
    if (path.empty()) {
        emit(fallback);
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw InputError("cannot write '" + path + "'");
    }
    emit(out);
}

int cmd_evolve(const std::string& scenario, const std::string& out_path, std::ostream& out) {
    const auto loaded = load_scenario(scenario);
    const auto table = trajectory_table(evolve(loaded.scenario));
    write_output(out_path, [&](std::ostream& os) { table.write(os); }, out);
    return kExitPass;
}

int cmd_figure(const std::string& figure, const std::string& dir, std::ostream& out) {
    for (const auto& path : write_figure(figure, dir)) {
        out << path.string() << '\n';
    }
    return kExitPass;
}

int cmd_verify(const std::string& suite, const std::string& scenario, const std::optional<std::string>& seed_flag,
               const std::string& report_path, std::ostream& out) {
    Report report;
    report.suite = suite;
    report.seed = resolve_seed(seed_flag);

    SuiteContext ctx;
    ctx.seed = report.seed;
    std::string identity = "builtin-presets";
    if (!scenario.empty()) {
        auto loaded = load_scenario(scenario);
        ctx.scenario = std::move(loaded.scenario);
        ctx.scenario_label = loaded.label;
        identity = std::move(loaded.identity);
        report.scenario = loaded.label;
    }
    report.input_digest =
        sha256_hex("suite=" + suite + "\nseed=" + std::to_string(report.seed) + "\nscenario=" + identity);
    report.checks = run_suite(suite, ctx);
    const auto json = report.to_json();
    write_output(report_path, [&](std::ostream& os) { os << json; }, out);
    return report.exit_status();
}

}  // namespace

const char* version() { return QUNCERT_VERSION; }

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Time-energy uncertainty toolkit for finite-dimensional quantum systems", "quncert"};
    app.set_version_flag("--version", std::string(version()));
    app.require_subcommand(1);

    std::string evolve_scenario;
    std::string evolve_out;
    auto* evolve_cmd = app.add_subcommand("evolve", "Evolve a scenario and write its trajectory as CSV");
    evolve_cmd->add_option("scenario", evolve_scenario, "Scenario file or preset name (e.g. fig2D)")->required();
    evolve_cmd->add_option("-o,--output", evolve_out, "Output CSV (default: stdout)");

    std::string figure_id;
    std::string figure_dir = ".";
    auto* figure_cmd = app.add_subcommand("figure", "Write the CSV data behind a figure");
    figure_cmd->add_option("figure", figure_id, "fig1, fig2 or fig3")
        ->required()
        ->check(CLI::IsMember({"fig1", "fig2", "fig3"}));
    figure_cmd->add_option("-d,--dir", figure_dir, "Output directory");

    std::string suite;
    std::string verify_scenario;
    std::optional<std::string> seed_flag;
    std::string report_path;
    auto* verify_cmd = app.add_subcommand("verify", "Run a verification suite and emit a JSON report");
    verify_cmd->add_option("suite", suite, "Suite name")->required()->check(CLI::IsMember(suite_names()));
    verify_cmd->add_option("--scenario", verify_scenario, "Scenario file or preset name");
    verify_cmd->add_option("--seed", seed_flag, std::string("Seed (default: $") + kSeedEnvVar + " or 42)");
    verify_cmd->add_option("--report", report_path, "Report path (default: stdout)");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return kExitPass;
    } catch (const CLI::CallForAllHelp& e) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitPass;
    } catch (const CLI::CallForVersion& e) {
        out << version() << '\n';
        return kExitPass;
    } catch (const CLI::ParseError& e) {
        err << "quncert: " << e.what() << '\n';
        return kExitInputError;
    }

    try {
        if (*evolve_cmd) return cmd_evolve(evolve_scenario, evolve_out, out);
        if (*figure_cmd) return cmd_figure(figure_id, figure_dir, out);
        return cmd_verify(suite, verify_scenario, seed_flag, report_path, out);
    } catch (const InputError& e) {
        err << "quncert: " << e.what() << '\n';
    } catch (const Error& e) {
        err << "quncert: " << e.what() << '\n';
    }
    return kExitInputError;
}

}  // namespace quncert::cli
