// Copyright 2026 The pstbath Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


// pstbath — run scenario sweeps, emit presets, print solver comparison reports.
//
//   pstbath run --config <path> [--solver exact|weisskopf|closed_form|compare] [--seed <u64>] [--output <path>]
//   pstbath preset --name fig1a|fig1b|fig2|fig3 --output <path>
//   pstbath report --config <path>
//
// Exit status: 0 success, 1 bad input (parse, validation, I/O), 2 numeric failure.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "pstbath/pstbath.hpp"

namespace {

using namespace pstbath;
using nlohmann::ordered_json;

constexpr int kExitInput = 1;
constexpr int kExitNumeric = 2;

ordered_json to_json(const GridPoint& p) { return {{"t", p.t}, {"T", p.temperature}}; }

ordered_json to_json(const DeviationStats& d) {
    return {{"max_abs_deviation", d.max}, {"mean_abs_deviation", d.mean}, {"max_at", to_json(d.at)}};
}

ordered_json to_json(const CompareReport& r, const Scenario& s) {
    ordered_json j;
    j["seed"] = s.bath.seed;
    j["N"] = s.chain.n_sites;
    j["M"] = s.bath.m_sites;
    j["grid_points"] = r.points;
    j["mtf"] = to_json(r.mtf);
    j["fidelity"] = to_json(r.fidelity);
    j["sum_rule_max_violation"] = {{"exact", r.sum_rule_exact}, {"weisskopf", r.sum_rule_weisskopf}};
    auto& comps = j["components_beyond_tolerance"] = ordered_json::array();
    for (const auto& c : r.disagreeing)
        comps.push_back({{"component", c.label}, {"max_abs_deviation", c.max_deviation}, {"at", to_json(c.at)}});
    j["component_tolerance"] = CompareReport::kComponentTolerance;
    j["first_peak"] = {{"exact", {{"t", r.first_peak_exact.time}, {"mtf", r.first_peak_exact.height}}},
                       {"weisskopf", {{"t", r.first_peak_weisskopf.time}, {"mtf", r.first_peak_weisskopf.height}}},
                       {"relative_deviation", r.first_peak_relative_deviation}};
    j["warnings"] = r.warnings;
    return j;
}

int cmd_run(const std::string& config, const std::string& solver, const std::optional<std::uint64_t>& seed,
            const std::string& output) {
    Scenario s = load_scenario(config);
    if (!solver.empty()) {
        static const std::map<std::string, SolverKind> kinds = {{"exact", SolverKind::exact},
                                                                {"weisskopf", SolverKind::weisskopf},
                                                                {"closed_form", SolverKind::closed_form},
                                                                {"compare", SolverKind::compare}};
        s.solver = kinds.at(solver);
    }
    if (seed) s.bath.seed = *seed;
    std::string path = output.empty() ? s.output_path : output;
    const auto rows = run_sweep(s);
    const std::string csv = to_csv(rows, s.solver == SolverKind::compare);
    if (path.empty() || path == "-") {
        std::cout << csv;
    } else {
        write_csv(rows, path, s.solver == SolverKind::compare);
        std::fprintf(stderr, "wrote %zu rows to %s\n", rows.size(), path.c_str());
    }
    return 0;
}

int cmd_preset(const std::string& name, const std::string& output) {
    const Scenario s = preset(name);
    const std::string text =
        to_text(s, "preset " + name + " (seed " + std::to_string(kPresetSeed) + "); see docs/scenario-format.md");
    if (output == "-") {
        std::cout << text;
        return 0;
    }
    std::ofstream out(output, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot open '" + output + "' for writing");
    out << text;
    if (!out) throw IoError("write to '" + output + "' failed");
    return 0;
}

int cmd_report(const std::string& config) {
    const Scenario s = load_scenario(config);
    std::cout << to_json(compare_report(s), s).dump(2) << '\n';
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"State transfer through an engineered chain coupled to a fermionic bath"};
    app.require_subcommand(1);

    std::string config, solver, output, name;
    std::uint64_t seed_value = 0;

    auto* run = app.add_subcommand("run", "evaluate a scenario sweep and write CSV");
    run->add_option("--config", config, "scenario file")->required()->check(CLI::ExistingFile);
    run->add_option("--solver", solver, "override the scenario's solver")
        ->check(CLI::IsMember({"exact", "weisskopf", "closed_form", "compare"}));
    auto* seed_opt = run->add_option("--seed", seed_value, "override bath.seed");
    run->add_option("--output", output, "CSV path ('-' for stdout); default output.path");

    auto* pre = app.add_subcommand("preset", "write a shipped preset scenario file");
    pre->add_option("--name", name, "preset name")->required()->check(CLI::IsMember(preset_names()));
    pre->add_option("--output", output, "destination path ('-' for stdout)")->required();

    auto* rep = app.add_subcommand("report", "compare exact and perturbative solvers on a scenario grid");
    rep->add_option("--config", config, "scenario file")->required()->check(CLI::ExistingFile);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitInput;
    }

    try {
        if (*run) {
            std::optional<std::uint64_t> seed;
            if (*seed_opt) seed = seed_value;
            return cmd_run(config, solver, seed, output);
        }
        if (*pre) return cmd_preset(name, output);
        if (*rep) return cmd_report(config);
    } catch (const NumericError& e) {
        std::fprintf(stderr, "pstbath: numeric failure: %s\n", e.what());
        return kExitNumeric;
    } catch (const ParseError& e) {
        std::fprintf(stderr, "pstbath: %s: %s\n", config.c_str(), e.what());
        return kExitInput;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "pstbath: %s\n", e.what());
        return kExitInput;
    }
    return kExitInput;
}
