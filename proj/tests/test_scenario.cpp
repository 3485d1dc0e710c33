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

#include <gtest/gtest.h>

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <sstream>
#include <string>

#include "pstbath/pstbath.hpp"

namespace pstbath {
namespace {

constexpr double kPi = std::numbers::pi;

const char* kMinimal = R"(format = pstbath-scenario/1
chain.n = 4
bath.seed = 7
)";

std::string with(const std::string& extra) { return std::string(kMinimal) + extra + "\n"; }

std::string field_of(const std::string& text) {
    try {
        parse_scenario(text);
    } catch (const ValidationError& e) {
        return e.field();
    }
    return "<no error>";
}

std::string temp_path(const std::string& name) {
    return (std::filesystem::temp_directory_path() / ("pstbath_test_" + name)).string();
}

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

TEST(ParseScenario, MinimalFileDefaults) {
    const auto s = parse_scenario(kMinimal);
    EXPECT_EQ(s.chain.n_sites, 4u);
    EXPECT_DOUBLE_EQ(s.chain.theta, 1.0);
    EXPECT_EQ(s.chain.origin, EnergyOrigin::mode_grid);
    EXPECT_EQ(s.bath.seed, 7u);
    EXPECT_EQ(s.bath.m_sites, 40u);
    EXPECT_DOUBLE_EQ(s.bath.energy_mean, 2.5);
    EXPECT_DOUBLE_EQ(s.bath.energy_std, 1.0);
    EXPECT_DOUBLE_EQ(s.eta, 0.25);
    EXPECT_EQ(s.solver, SolverKind::weisskopf);
    EXPECT_EQ(s.amplitudes.amp1, cplx(1.0, 0.0));
    EXPECT_TRUE(s.temperatures.empty());
    EXPECT_EQ(s.temperature_points(), std::vector<double>{0.0});
    EXPECT_DOUBLE_EQ(s.time.stop, kPi);
    EXPECT_FALSE(s.phase_compensation);
}

TEST(ParseScenario, BroadeningDefaultScalesWithTheta) {
    EXPECT_DOUBLE_EQ(parse_scenario(with("chain.theta = 2")).eta, 0.5);
    EXPECT_DOUBLE_EQ(parse_scenario(with("weisskopf.eta = 0.1")).eta, 0.1);
}

TEST(ParseScenario, AmplitudeNormalization) {
    EXPECT_EQ(field_of(with("state.amp0 = 0.3\nstate.amp1 = 0.9")), "amplitudes");  // 0.09 + 0.81 = 0.9
    const auto s = parse_scenario(with("state.amp0 = 0, 0.6\nstate.amp1 = 0.8"));
    EXPECT_EQ(s.amplitudes.amp0, cplx(0.0, 0.6));
    EXPECT_EQ(s.amplitudes.amp1, cplx(0.8, 0.0));
    EXPECT_EQ(field_of(with("state.amp1 = 1, 0, 0")), "state.amp1");
}

TEST(ParseScenario, SeedIsRequired) {
    EXPECT_EQ(field_of("format = pstbath-scenario/1\nchain.n = 4\n"), "bath.seed");
    EXPECT_EQ(field_of("format = pstbath-scenario/1\nchain.n = 4\nbath.seed = -1\n"), "bath.seed");
}

TEST(ParseScenario, FormatLine) {
    EXPECT_EQ(field_of("chain.n = 4\nbath.seed = 1\n"), "format");
    EXPECT_EQ(field_of("format = pstbath-scenario/2\nchain.n = 4\nbath.seed = 1\n"), "format");
}

TEST(ParseScenario, UnknownKeysRejected) {
    try {
        parse_scenario(with("# comment\n\nchain.length = 3"));
        FAIL() << "expected ParseError";
    } catch (const ParseError& e) {
        EXPECT_EQ(e.line(), 6);
        EXPECT_NE(std::string(e.what()).find("chain.length"), std::string::npos);
    }
}

TEST(ParseScenario, SyntaxErrors) {
    EXPECT_THROW(parse_scenario(with("solver exact")), ParseError);
    EXPECT_THROW(parse_scenario(with("= 3")), ParseError);
    EXPECT_THROW(parse_scenario(with("chain.n = 5")), ParseError);  // duplicate
}

TEST(ParseScenario, PiSuffixAndComments) {
    const auto s = parse_scenario(with("time.stop = 6pi   # three transfers\ntime.start = 0.5 pi\nchain.theta = pi"));
    EXPECT_DOUBLE_EQ(s.time.stop, 6.0 * kPi);
    EXPECT_DOUBLE_EQ(s.time.start, 0.5 * kPi);
    EXPECT_DOUBLE_EQ(s.chain.theta, kPi);
    EXPECT_EQ(field_of(with("time.stop = 6p")), "time.stop");
    EXPECT_EQ(field_of(with("time.stop = ")), "time.stop");
}

TEST(ParseScenario, FieldValidation) {
    EXPECT_EQ(field_of(with("time.steps = 1")), "time.steps");
    EXPECT_EQ(field_of(with("time.stop = 0")), "time.stop");
    EXPECT_EQ(field_of(with("weisskopf.eta = 0")), "weisskopf.eta");
    EXPECT_EQ(field_of(with("coupling.alpha = -1")), "coupling.alpha");
    EXPECT_EQ(field_of(with("bath.std = -1")), "bath.std");
    EXPECT_EQ(field_of(with("bath.m = 2\nbath.energies = 1, 2, 3")), "bath.energies");
    EXPECT_EQ(field_of(with("solver = magic")), "solver");
    EXPECT_EQ(field_of(with("chain.origin = left")), "chain.origin");
    EXPECT_EQ(field_of(with("temperature.values = 0, -1")), "temperature.values");
    EXPECT_EQ(field_of(with("temperature.values = 1\ntemperature.start = 0")), "temperature.values");
    EXPECT_EQ(field_of(with("temperature.start = 0\ntemperature.stop = 1")), "temperature.steps");
    EXPECT_EQ(field_of(with("output.phase_compensation = yes")), "output.phase_compensation");
    EXPECT_EQ(field_of("format = pstbath-scenario/1\nchain.n = 1\nbath.seed = 1\n"), "chain.n");
}

TEST(ParseScenario, TemperatureGrids) {
    const auto listed = parse_scenario(with("temperature.values = 0, 0.5, 2"));
    EXPECT_EQ(listed.temperatures, (std::vector<double>{0.0, 0.5, 2.0}));
    const auto ranged = parse_scenario(with("temperature.start = 0\ntemperature.stop = 10\ntemperature.steps = 50"));
    ASSERT_EQ(ranged.temperatures.size(), 50u);
    EXPECT_EQ(ranged.temperatures.front(), 0.0);
    EXPECT_EQ(ranged.temperatures.back(), 10.0);
}

TEST(LoadScenario, MissingFile) {
    EXPECT_THROW(load_scenario(temp_path("does_not_exist.scn")), IoError);
}

TEST(Presets, ShippedParameters) {
    const auto a = preset("fig1a");
    EXPECT_EQ(a.chain.n_sites, 4u);
    EXPECT_EQ(a.bath.m_sites, 40u);
    EXPECT_DOUBLE_EQ(a.alpha, 0.1);
    EXPECT_DOUBLE_EQ(a.bath.energy_mean, 2.5);
    EXPECT_DOUBLE_EQ(a.bath.energy_std, 1.0);
    EXPECT_EQ(a.bath.seed, kPresetSeed);

    const auto b = preset("fig1b");
    EXPECT_EQ(b.chain.n_sites, 10u);
    EXPECT_EQ(b.bath.m_sites, 100u);
    EXPECT_DOUBLE_EQ(b.bath.energy_mean, 5.0);
    EXPECT_DOUBLE_EQ(b.bath.energy_std, 2.5);

    const auto f2 = preset("fig2");
    const auto f3 = preset("fig3");
    EXPECT_DOUBLE_EQ(f2.amplitudes.amp0.real(), std::sqrt(3.0) / 2.0);
    EXPECT_DOUBLE_EQ(f2.amplitudes.amp1.real(), 0.5);
    EXPECT_DOUBLE_EQ(f3.amplitudes.amp0.real(), 0.5);
    EXPECT_DOUBLE_EQ(f3.amplitudes.amp1.real(), std::sqrt(3.0) / 2.0);
    EXPECT_EQ(f2.temperatures.size(), 50u);
    EXPECT_DOUBLE_EQ(f2.temperatures.back(), 10.0);
    EXPECT_DOUBLE_EQ(f2.time.stop, 6.0 * kPi);
    EXPECT_THROW(preset("fig4"), ValidationError);
}

TEST(Presets, TextRoundTrip) {
    for (const auto& name : preset_names()) {
        const auto s = preset(name);
        const auto text = to_text(s, "round trip");
        const auto back = parse_scenario(text);
        EXPECT_EQ(to_text(back, "round trip"), text) << name;
        EXPECT_EQ(back.temperatures, s.temperatures) << name;
        EXPECT_EQ(back.time.stop, s.time.stop) << name;
        EXPECT_EQ(back.amplitudes.amp0, s.amplitudes.amp0) << name;
        EXPECT_EQ(back.alpha, s.alpha) << name;
    }
}

Scenario small(SolverKind solver) {
    auto s = parse_scenario(with("time.steps = 9\ntemperature.values = 0, 1.5"));
    s.solver = solver;
    return s;
}

TEST(RunSweep, RowsOrderedByTemperatureThenTime) {
    const auto rows = run_sweep(small(SolverKind::weisskopf));
    ASSERT_EQ(rows.size(), 18u);
    for (std::size_t k = 0; k < rows.size(); ++k) {
        EXPECT_EQ(rows[k].temperature, k < 9 ? 0.0 : 1.5);
        EXPECT_DOUBLE_EQ(rows[k].t, kPi * static_cast<double>(k % 9) / 8.0);
        EXPECT_EQ(rows[k].seed, 7u);
        EXPECT_EQ(rows[k].n, 4u);
        EXPECT_EQ(rows[k].m, 40u);
    }
}

TEST(RunSweep, ClosedFormPerfectTransfer) {
    auto s = small(SolverKind::closed_form);
    s.gamma = 0.0;
    const auto rows = run_sweep(s);
    EXPECT_NEAR(rows[8].mtf, 1.0, 1e-15);
    EXPECT_EQ(rows[0].mtf, 0.0);
}

TEST(RunSweep, ExactDecoupledFidelityIsClosedForm) {
    auto s = parse_scenario(with("coupling.profile = uniform\ncoupling.g0 = 0\ntime.stop = 4pi\ntime.steps = 50\nsolver = exact"));
    for (const auto& row : run_sweep(s))
        EXPECT_NEAR(row.fidelity, std::pow(std::sin(0.5 * row.t), 6), 1e-8) << row.t;
}

TEST(RunSweep, CompareEmitsBothSolversWithDeviation) {
    auto s = preset("fig1a");
    s.time.steps = 13;
    s.solver = SolverKind::compare;
    const auto rows = run_sweep(s);
    ASSERT_EQ(rows.size(), 26u);
    for (std::size_t p = 0; p < 13; ++p) {
        const auto& ex = rows[2 * p];
        const auto& wk = rows[2 * p + 1];
        EXPECT_EQ(ex.solver, SolverKind::exact);
        EXPECT_EQ(wk.solver, SolverKind::weisskopf);
        EXPECT_EQ(ex.t, wk.t);
        ASSERT_TRUE(ex.dev_mtf && wk.dev_mtf);
        EXPECT_EQ(*ex.dev_mtf, std::abs(ex.mtf - wk.mtf));
        EXPECT_EQ(*wk.dev_fidelity, std::abs(ex.fidelity - wk.fidelity));
    }
    const auto header = to_csv({}, true);
    EXPECT_NE(header.find(",dev_mtf,dev_fidelity\n"), std::string::npos);
}

TEST(RunSweep, ThreadCountDoesNotChangeOutput) {
    auto s = preset("fig2");
    s.time.steps = 21;
    s.temperature_grid.reset();
    s.temperatures = {0.0, 0.7, 3.0, 9.0};
    s.solver = SolverKind::compare;
    const auto serial = to_csv(run_sweep(s, 1), true);
    EXPECT_EQ(to_csv(run_sweep(s, 3), true), serial);
    EXPECT_EQ(to_csv(run_sweep(s, 8), true), serial);
}

TEST(RunSweep, PhaseCompensationAtPerfectTransfer) {
    // Odd N: the raw bath-free superposition picks up a relative sign at t = pi.
    auto s = parse_scenario(
        "format = pstbath-scenario/1\nchain.n = 3\nbath.seed = 1\ncoupling.profile = uniform\ncoupling.g0 = 0\n"
        "solver = exact\nstate.amp0 = 0.6\nstate.amp1 = 0.8\n");
    EXPECT_NEAR(run_sweep(s).back().fidelity, std::pow(0.36 - 0.64, 2), 1e-10);
    s.phase_compensation = true;
    EXPECT_NEAR(run_sweep(s).back().fidelity, 1.0, 1e-10);
}

TEST(Csv, EmptyAndSingleRow) {
    const auto header = to_csv({}, false);
    EXPECT_EQ(header,
              "solver,seed,N,M,t,T,mtf,fidelity,F0000,F0011,F1100,F1111,F0110r,F0110i,F1010r,F1010i,F0101r,F0101i,"
              "F1001r,F1001i\n");
    SweepRow row;
    row.seed = 9;
    row.n = 4;
    row.m = 40;
    row.t = kPi;
    row.mtf = -0.0;
    row.fidelity = 1.0 / 3.0;
    row.components.at(1, 0, 0, 1) = {0.5, -0.0};
    const auto text = to_csv({row}, false);
    EXPECT_EQ(text, header + "weisskopf,9,4,40,3.14159265359,0,0,0.333333333333,0,0,0,0,0,0,0,0,0,0,0.5,0\n");
}

TEST(Csv, ByteIdenticalReruns) {
    const auto s = small(SolverKind::exact);
    const auto a = temp_path("a.csv"), b = temp_path("b.csv");
    write_csv(run_sweep(s), a);
    write_csv(run_sweep(s), b);
    const auto ta = slurp(a);
    EXPECT_FALSE(ta.empty());
    EXPECT_EQ(ta.back(), '\n');
    EXPECT_EQ(ta, slurp(b));
    std::filesystem::remove(a);
    std::filesystem::remove(b);
    EXPECT_THROW(write_csv({}, "/nonexistent-dir/x.csv"), IoError);
}

TEST(CompareReport, DecoupledSolversAgree) {
    auto s = parse_scenario(with("coupling.profile = uniform\ncoupling.g0 = 0\ntime.stop = 4pi\ntime.steps = 40\n"
                                 "temperature.values = 0, 2\nstate.amp0 = 0.6\nstate.amp1 = 0.8"));
    const auto rep = compare_report(s);
    EXPECT_EQ(rep.points, 80u);
    EXPECT_LT(rep.mtf.max, 1e-8);
    EXPECT_LT(rep.fidelity.max, 1e-8);
    EXPECT_TRUE(rep.disagreeing.empty());
    EXPECT_LT(rep.first_peak_relative_deviation, 1e-8);
    EXPECT_NEAR(rep.first_peak_exact.time, kPi, 1e-5);
    EXPECT_TRUE(rep.warnings.empty());
}

TEST(CompareReport, StrongCouplingIsFlagged) {
    auto s = parse_scenario(with("coupling.alpha = 0.5\ntime.stop = 4pi\ntime.steps = 40"));
    const auto rep = compare_report(s);
    EXPECT_GT(rep.mtf.max, CompareReport::kLargeDeviation);
    EXPECT_FALSE(rep.warnings.empty());
    EXPECT_LT(rep.sum_rule_exact, 1e-10);
    EXPECT_LT(rep.sum_rule_weisskopf, 1e-10);
}

TEST(CompareReport, WeakCouplingFirstPeakFixture) {
    // fig1a bath (seed 2007) at alpha = 0.02, T = 0. Frozen from the acceptance run.
    auto s = preset("fig1a");
    s.alpha = 0.02;
    s.time.steps = 61;
    const auto rep = compare_report(s);
    EXPECT_NEAR(rep.first_peak_exact.height, 0.60840479050595131, 1e-9);
    EXPECT_NEAR(rep.first_peak_weisskopf.height, 0.66612904641873016, 1e-9);
    EXPECT_NEAR(rep.first_peak_relative_deviation, 0.094878043062046211, 1e-8);
}

TEST(WindowMaxima, FindsPeakInsideEachWindow) {
    const auto peaks = window_maxima([](double t) { return std::exp(-0.1 * t) * std::pow(std::sin(0.5 * t), 2); }, 1.0, 3);
    ASSERT_EQ(peaks.size(), 3u);
    for (std::size_t k = 0; k < 3; ++k) {
        // d/dt: peak where tan(t/2) = 10, shifted by 2 pi k
        const double tk = 2.0 * std::atan(10.0) + 2.0 * kPi * static_cast<double>(k);
        EXPECT_NEAR(peaks[k].time, tk, 1e-6);
        EXPECT_NEAR(peaks[k].height, std::exp(-0.1 * tk) * std::pow(std::sin(0.5 * tk), 2), 1e-12);
    }
}

}  // namespace
}  // namespace pstbath
