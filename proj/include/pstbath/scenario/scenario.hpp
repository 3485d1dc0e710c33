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


// scenario.hpp — experiment description and its flat key = value file format.
//
// The format is documented in docs/scenario-format.md; parse_scenario and to_text are its
// reference implementation. Every key is optional except `format`, `chain.n` and `bath.seed`.

#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <map>
#include <numbers>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "pstbath/core/system_model.hpp"
#include "pstbath/errors.hpp"
#include "pstbath/fidelity.hpp"

namespace pstbath {

inline constexpr std::string_view kScenarioFormat = "pstbath-scenario/1";

enum class SolverKind { exact, weisskopf, closed_form, compare };

inline const char* to_string(SolverKind s) noexcept {
    switch (s) {
        case SolverKind::exact: return "exact";
        case SolverKind::weisskopf: return "weisskopf";
        case SolverKind::closed_form: return "closed_form";
        case SolverKind::compare: return "compare";
    }
    return "?";
}

enum class CouplingProfile { gaussian, uniform };

struct TimeGrid {
    double start{0.0};
    double stop{std::numbers::pi};
    std::size_t steps{101};

    std::vector<double> points() const {
        std::vector<double> out(steps);
        for (std::size_t k = 0; k < steps; ++k)
            out[k] = k + 1 == steps ? stop : start + (stop - start) * static_cast<double>(k) / static_cast<double>(steps - 1);
        return out;
    }
};

struct Scenario {
    ChainSpec chain{4, 1.0, EnergyOrigin::mode_grid};
    BathSpec bath;
    CouplingProfile profile{CouplingProfile::gaussian};
    double alpha{0.1};
    double g0{0.0};
    double eta{0.25};
    std::optional<double> gamma;  // closed_form only; defaults to the mean of Gamma_m
    SolverKind solver{SolverKind::weisskopf};
    QubitAmplitudes amplitudes{{0.0, 0.0}, {1.0, 0.0}};
    TimeGrid time;
    std::vector<double> temperatures;  // empty means T = 0
    std::optional<TimeGrid> temperature_grid;  // set when temperatures came from start/stop/steps
    bool phase_compensation{false};
    std::string output_path;

    CouplingModel coupling() const {
        if (profile == CouplingProfile::uniform) return UniformCoupling{g0};
        return GaussianCoupling{alpha};
    }
    SystemModel model() const { return make_system_model(chain, bath, coupling()); }
    std::vector<double> temperature_points() const {
        return temperatures.empty() ? std::vector<double>{0.0} : temperatures;
    }
};

// Throws ValidationError naming the offending key.
inline void validate(const Scenario& s) {
    auto fail = [](const char* field, const std::string& what) { throw ValidationError(field, what); };
    if (s.chain.n_sites < 2) fail("chain.n", "must be >= 2");
    if (!(s.chain.theta > 0.0) || !std::isfinite(s.chain.theta)) fail("chain.theta", "must be > 0");
    if (s.bath.m_sites < 1) fail("bath.m", "must be >= 1");
    if (!std::isfinite(s.bath.energy_mean)) fail("bath.mean", "must be finite");
    if (!(s.bath.energy_std >= 0.0) || !std::isfinite(s.bath.energy_std)) fail("bath.std", "must be >= 0");
    if (s.bath.energies && s.bath.energies->size() != s.bath.m_sites)
        fail("bath.energies", "has " + std::to_string(s.bath.energies->size()) + " entries, bath.m = " +
                                  std::to_string(s.bath.m_sites));
    if (!(s.alpha > 0.0) || !std::isfinite(s.alpha)) fail("coupling.alpha", "must be > 0");
    if (!std::isfinite(s.g0)) fail("coupling.g0", "must be finite");
    if (!(s.eta > 0.0) || !std::isfinite(s.eta)) fail("weisskopf.eta", "must be > 0");
    if (s.gamma && !(*s.gamma >= 0.0)) fail("weisskopf.gamma", "must be >= 0");
    const double norm = std::norm(s.amplitudes.amp0) + std::norm(s.amplitudes.amp1);
    if (!(std::abs(norm - 1.0) <= 1e-12))
        fail("amplitudes", "|amp0|^2 + |amp1|^2 = " + std::to_string(norm) + ", expected 1");
    if (s.time.steps < 2) fail("time.steps", "must be >= 2");
    if (!std::isfinite(s.time.start) || !std::isfinite(s.time.stop) || !(s.time.stop > s.time.start))
        fail("time.stop", "must be finite and > time.start");
    if (s.time.start < 0.0) fail("time.start", "must be >= 0");
    for (double t : s.temperatures)
        if (!(t >= 0.0) || !std::isfinite(t)) fail("temperature.values", "temperatures must be finite and >= 0");
}

namespace detail {

inline std::string trim(std::string_view s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string_view::npos) return {};
    const auto e = s.find_last_not_of(" \t\r");
    return std::string(s.substr(b, e - b + 1));
}

inline std::vector<std::string> split_list(const std::string& v) {
    std::vector<std::string> out;
    std::string item;
    std::istringstream in(v);
    while (std::getline(in, item, ',')) out.push_back(trim(item));
    if (!v.empty() && v.back() == ',') out.emplace_back();
    return out;
}

// Plain decimal, optionally followed by `pi`: "6pi", "0.5 pi", "pi".
inline double parse_real(const std::string& field, const std::string& text) {
    std::string s = trim(text);
    double scale = 1.0;
    if (s.size() >= 2 && s.compare(s.size() - 2, 2, "pi") == 0) {
        scale = std::numbers::pi;
        s = trim(s.substr(0, s.size() - 2));
        if (s.empty()) return scale;
    }
    if (s.empty()) throw ValidationError(field, "expected a number");
    char* end = nullptr;
    const double v = std::strtod(s.c_str(), &end);
    if (end != s.c_str() + s.size()) throw ValidationError(field, "not a number: '" + text + "'");
    return v * scale;
}

inline std::uint64_t parse_unsigned(const std::string& field, const std::string& text) {
    const std::string s = trim(text);
    if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos)
        throw ValidationError(field, "expected a non-negative integer, got '" + text + "'");
    try {
        return std::stoull(s);
    } catch (const std::out_of_range&) {
        throw ValidationError(field, "out of range: '" + text + "'");
    }
}

inline long parse_signed(const std::string& field, const std::string& text) {
    std::string s = trim(text);
    const bool negative = !s.empty() && s[0] == '-';
    const auto magnitude = parse_unsigned(field, negative ? s.substr(1) : s);
    if (magnitude > 1000000000ULL) throw ValidationError(field, "out of range: '" + text + "'");
    return negative ? -static_cast<long>(magnitude) : static_cast<long>(magnitude);
}

inline bool parse_bool(const std::string& field, const std::string& text) {
    const std::string s = trim(text);
    if (s == "true") return true;
    if (s == "false") return false;
    throw ValidationError(field, "expected true or false, got '" + text + "'");
}

// "re" or "re, im".
inline cplx parse_complex(const std::string& field, const std::string& text) {
    const auto parts = split_list(text);
    if (parts.size() == 1) return {parse_real(field, parts[0]), 0.0};
    if (parts.size() == 2) return {parse_real(field, parts[0]), parse_real(field, parts[1])};
    throw ValidationError(field, "expected 're' or 're, im'");
}

inline std::vector<double> parse_real_list(const std::string& field, const std::string& text) {
    std::vector<double> out;
    if (trim(text).empty()) return out;
    for (const auto& item : split_list(text)) out.push_back(parse_real(field, item));
    return out;
}

// Shortest text that reads back to exactly v; multiples of pi are written as "6pi".
inline std::string format_real(double v) {
    if (v == 0.0) return "0";
    auto shortest = [](double x) {
        char buf[40];
        for (int prec = 1; prec <= 17; ++prec) {
            std::snprintf(buf, sizeof buf, "%.*g", prec, x);
            const bool plain = std::string_view(buf).find('e') == std::string_view::npos ||
                               std::abs(x) < 1e-4 || std::abs(x) >= 1e15;
            if (plain && std::strtod(buf, nullptr) == x) break;
        }
        return std::string(buf);
    };
    const std::string over_pi = shortest(v / std::numbers::pi);
    if (over_pi.size() <= 6 && std::strtod(over_pi.c_str(), nullptr) * std::numbers::pi == v)
        return over_pi == "1" ? "pi" : over_pi + "pi";
    return shortest(v);
}

}  // namespace detail

// Parses scenario text. Syntax errors raise ParseError with the line number; bad values raise
// ValidationError naming the key.
inline Scenario parse_scenario(std::string_view text) {
    std::map<std::string, std::pair<std::string, int>> kv;
    std::istringstream in{std::string(text)};
    std::string raw;
    int lineno = 0;
    while (std::getline(in, raw)) {
        ++lineno;
        const auto hash = raw.find('#');
        const std::string line = detail::trim(hash == std::string::npos ? raw : raw.substr(0, hash));
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos) throw ParseError("expected 'key = value'", lineno);
        const std::string key = detail::trim(line.substr(0, eq));
        if (key.empty()) throw ParseError("empty key", lineno);
        if (kv.count(key)) throw ParseError("duplicate key '" + key + "'", lineno);
        kv[key] = {detail::trim(line.substr(eq + 1)), lineno};
    }

    auto take = [&](const char* key) -> std::optional<std::string> {
        auto it = kv.find(key);
        if (it == kv.end()) return std::nullopt;
        std::string v = it->second.first;
        kv.erase(it);
        return v;
    };

    const auto format = take("format");
    if (!format) throw ValidationError("format", "missing (expected '" + std::string(kScenarioFormat) + "')");
    if (*format != kScenarioFormat)
        throw ValidationError("format", "unsupported '" + *format + "', expected '" + std::string(kScenarioFormat) + "'");

    Scenario s;
    const auto n = take("chain.n");
    if (!n) throw ValidationError("chain.n", "missing");
    s.chain.n_sites = static_cast<std::size_t>(detail::parse_unsigned("chain.n", *n));
    if (auto v = take("chain.theta")) s.chain.theta = detail::parse_real("chain.theta", *v);
    if (auto v = take("chain.origin")) {
        if (*v == "mode_grid") s.chain.origin = EnergyOrigin::mode_grid;
        else if (*v == "centered") s.chain.origin = EnergyOrigin::centered;
        else throw ValidationError("chain.origin", "expected mode_grid or centered, got '" + *v + "'");
    }
    const double theta = s.chain.theta;

    const auto seed = take("bath.seed");
    if (!seed) throw ValidationError("bath.seed", "missing (no default seed)");
    s.bath.seed = detail::parse_unsigned("bath.seed", *seed);
    s.bath.m_sites = 10 * s.chain.n_sites;
    if (auto v = take("bath.m")) s.bath.m_sites = static_cast<std::size_t>(detail::parse_unsigned("bath.m", *v));
    s.bath.energy_mean = 0.5 * theta * static_cast<double>(s.chain.n_sites + 1);
    if (auto v = take("bath.mean")) s.bath.energy_mean = detail::parse_real("bath.mean", *v);
    s.bath.energy_std = theta;
    if (auto v = take("bath.std")) s.bath.energy_std = detail::parse_real("bath.std", *v);
    if (auto v = take("bath.energies")) s.bath.energies = detail::parse_real_list("bath.energies", *v);
    if (auto v = take("bath.offset")) s.bath.offset = detail::parse_signed("bath.offset", *v);

    if (auto v = take("coupling.profile")) {
        if (*v == "gaussian") s.profile = CouplingProfile::gaussian;
        else if (*v == "uniform") s.profile = CouplingProfile::uniform;
        else throw ValidationError("coupling.profile", "expected gaussian or uniform, got '" + *v + "'");
    }
    if (auto v = take("coupling.alpha")) s.alpha = detail::parse_real("coupling.alpha", *v);
    if (auto v = take("coupling.g0")) s.g0 = detail::parse_real("coupling.g0", *v);

    s.eta = 0.25 * theta;
    if (auto v = take("weisskopf.eta")) s.eta = detail::parse_real("weisskopf.eta", *v);
    if (auto v = take("weisskopf.gamma")) s.gamma = detail::parse_real("weisskopf.gamma", *v);

    if (auto v = take("solver")) {
        if (*v == "exact") s.solver = SolverKind::exact;
        else if (*v == "weisskopf") s.solver = SolverKind::weisskopf;
        else if (*v == "closed_form") s.solver = SolverKind::closed_form;
        else if (*v == "compare") s.solver = SolverKind::compare;
        else throw ValidationError("solver", "expected exact, weisskopf, closed_form or compare, got '" + *v + "'");
    }

    if (auto v = take("state.amp0")) s.amplitudes.amp0 = detail::parse_complex("state.amp0", *v);
    if (auto v = take("state.amp1")) s.amplitudes.amp1 = detail::parse_complex("state.amp1", *v);

    s.time.stop = std::numbers::pi / theta;
    if (auto v = take("time.start")) s.time.start = detail::parse_real("time.start", *v);
    if (auto v = take("time.stop")) s.time.stop = detail::parse_real("time.stop", *v);
    if (auto v = take("time.steps")) s.time.steps = static_cast<std::size_t>(detail::parse_unsigned("time.steps", *v));

    auto values = take("temperature.values");
    auto t_start = take("temperature.start");
    auto t_stop = take("temperature.stop");
    auto t_steps = take("temperature.steps");
    if (values && (t_start || t_stop || t_steps))
        throw ValidationError("temperature.values", "give either a value list or start/stop/steps, not both");
    if (values) {
        s.temperatures = detail::parse_real_list("temperature.values", *values);
    } else if (t_start || t_stop || t_steps) {
        if (!t_start || !t_stop || !t_steps)
            throw ValidationError("temperature.steps", "temperature.start, .stop and .steps go together");
        TimeGrid g{detail::parse_real("temperature.start", *t_start), detail::parse_real("temperature.stop", *t_stop),
                   static_cast<std::size_t>(detail::parse_unsigned("temperature.steps", *t_steps))};
        if (g.steps < 2) throw ValidationError("temperature.steps", "must be >= 2");
        if (!(g.stop > g.start)) throw ValidationError("temperature.stop", "must be > temperature.start");
        s.temperatures = g.points();
        s.temperature_grid = g;
    }

    if (auto v = take("output.phase_compensation")) s.phase_compensation = detail::parse_bool("output.phase_compensation", *v);
    if (auto v = take("output.path")) s.output_path = *v;

    if (!kv.empty()) {
        const auto& [key, where] = *kv.begin();
        throw ParseError("unknown key '" + key + "'", where.second);
    }
    validate(s);
    return s;
}

inline Scenario load_scenario(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open scenario file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_scenario(buf.str());
}

// Canonical text form; parse_scenario(to_text(s)) reproduces s.
inline std::string to_text(const Scenario& s, std::string_view comment = {}) {
    using detail::format_real;
    std::ostringstream o;
    if (!comment.empty()) {
        std::istringstream lines{std::string(comment)};
        for (std::string l; std::getline(lines, l);) o << "# " << l << '\n';
    }
    auto complex_text = [](cplx z) {
        return z.imag() == 0.0 ? format_real(z.real()) : format_real(z.real()) + ", " + format_real(z.imag());
    };
    o << "format = " << kScenarioFormat << "\n\n";
    o << "chain.n = " << s.chain.n_sites << '\n';
    o << "chain.theta = " << format_real(s.chain.theta) << '\n';
    o << "chain.origin = " << to_string(s.chain.origin) << "\n\n";
    o << "bath.m = " << s.bath.m_sites << '\n';
    o << "bath.mean = " << format_real(s.bath.energy_mean) << '\n';
    o << "bath.std = " << format_real(s.bath.energy_std) << '\n';
    o << "bath.seed = " << s.bath.seed << '\n';
    if (s.bath.offset != 0) o << "bath.offset = " << s.bath.offset << '\n';
    if (s.bath.energies) {
        o << "bath.energies = ";
        for (std::size_t k = 0; k < s.bath.energies->size(); ++k) o << (k ? ", " : "") << format_real((*s.bath.energies)[k]);
        o << '\n';
    }
    o << '\n';
    if (s.profile == CouplingProfile::gaussian) {
        o << "coupling.profile = gaussian\ncoupling.alpha = " << format_real(s.alpha) << "\n\n";
    } else {
        o << "coupling.profile = uniform\ncoupling.g0 = " << format_real(s.g0) << "\n\n";
    }
    o << "weisskopf.eta = " << format_real(s.eta) << '\n';
    if (s.gamma) o << "weisskopf.gamma = " << format_real(*s.gamma) << '\n';
    o << "solver = " << to_string(s.solver) << "\n\n";
    o << "state.amp0 = " << complex_text(s.amplitudes.amp0) << '\n';
    o << "state.amp1 = " << complex_text(s.amplitudes.amp1) << "\n\n";
    o << "time.start = " << format_real(s.time.start) << '\n';
    o << "time.stop = " << format_real(s.time.stop) << '\n';
    o << "time.steps = " << s.time.steps << '\n';
    if (s.temperature_grid && s.temperature_grid->points() == s.temperatures) {
        o << "temperature.start = " << format_real(s.temperature_grid->start) << '\n';
        o << "temperature.stop = " << format_real(s.temperature_grid->stop) << '\n';
        o << "temperature.steps = " << s.temperature_grid->steps << "\n\n";
    } else {
        o << "temperature.values = ";
        for (std::size_t k = 0; k < s.temperatures.size(); ++k) o << (k ? ", " : "") << format_real(s.temperatures[k]);
        o << "\n\n";
    }
    o << "output.phase_compensation = " << (s.phase_compensation ? "true" : "false") << '\n';
    if (!s.output_path.empty()) o << "output.path = " << s.output_path << '\n';
    return o.str();
}

// Default seed of the shipped presets.
inline constexpr std::uint64_t kPresetSeed = 2007;

// Shipped parameters: M = 10 N, alpha = 0.1, bath N(2.5, 1) for N = 4 and N(5, 2.5) for N = 10.
// fig2 / fig3 are the N = 4 panels; their N = 10 panels take chain.n = 10 with the fig1b bath.
inline Scenario preset(std::string_view name) {
    Scenario s;
    s.bath.seed = kPresetSeed;
    s.alpha = 0.1;
    s.eta = 0.25;
    s.solver = SolverKind::weisskopf;
    s.time = TimeGrid{0.0, 6.0 * std::numbers::pi, 301};
    auto chain_of = [&](std::size_t n, double mean, double std) {
        s.chain = ChainSpec{n, 1.0, EnergyOrigin::mode_grid};
        s.bath.m_sites = 10 * n;
        s.bath.energy_mean = mean;
        s.bath.energy_std = std;
    };
    if (name == "fig1a") {
        chain_of(4, 2.5, 1.0);
        s.amplitudes = {{0.0, 0.0}, {1.0, 0.0}};
    } else if (name == "fig1b") {
        chain_of(10, 5.0, 2.5);
        s.amplitudes = {{0.0, 0.0}, {1.0, 0.0}};
    } else if (name == "fig2" || name == "fig3") {
        chain_of(4, 2.5, 1.0);
        const double big = std::sqrt(3.0) / 2.0;
        s.amplitudes = name == "fig2" ? QubitAmplitudes{{big, 0.0}, {0.5, 0.0}} : QubitAmplitudes{{0.5, 0.0}, {big, 0.0}};
        s.temperature_grid = TimeGrid{0.0, 10.0, 50};
        s.temperatures = s.temperature_grid->points();
    } else {
        throw ValidationError("preset", "unknown preset '" + std::string(name) + "' (fig1a, fig1b, fig2, fig3)");
    }
    s.output_path = std::string(name) + ".csv";
    return s;
}

inline const std::vector<std::string>& preset_names() {
    static const std::vector<std::string> names = {"fig1a", "fig1b", "fig2", "fig3"};
    return names;
}

}  // namespace pstbath
