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


// report.hpp — exact vs. perturbative comparison summary, plus transfer-peak search.

#pragma once

#include <array>
#include <cmath>
#include <functional>
#include <numbers>
#include <string>
#include <vector>

#include "pstbath/scenario/sweep.hpp"

namespace pstbath {

struct Peak {
    double time{0.0};
    double height{0.0};
};

// Maximum of f over each transfer window (2k pi / theta, 2(k+1) pi / theta], k = 0..windows-1:
// dense sampling, then golden-section refinement around the best sample.
inline std::vector<Peak> window_maxima(const std::function<double(double)>& f, double theta, std::size_t windows,
                                       std::size_t samples = 2000) {
    std::vector<Peak> out;
    const double width = 2.0 * std::numbers::pi / theta;
    const double step = width / static_cast<double>(samples);
    for (std::size_t k = 0; k < windows; ++k) {
        const double lo = width * static_cast<double>(k);
        Peak best{lo + step, f(lo + step)};
        for (std::size_t i = 2; i <= samples; ++i) {
            const double t = lo + step * static_cast<double>(i);
            const double v = f(t);
            if (v > best.height) best = {t, v};
        }
        double a = std::max(lo, best.time - step);
        double b = std::min(lo + width, best.time + step);
        const double r = 0.5 * (std::sqrt(5.0) - 1.0);
        double c = b - r * (b - a), d = a + r * (b - a);
        double fc = f(c), fd = f(d);
        for (int it = 0; it < 60 && b - a > 1e-12; ++it) {
            if (fc > fd) {
                b = d, d = c, fd = fc;
                c = b - r * (b - a), fc = f(c);
            } else {
                a = c, c = d, fc = fd;
                d = a + r * (b - a), fd = f(d);
            }
        }
        const double tm = 0.5 * (a + b);
        const double fm = f(tm);
        if (fm > best.height) best = {tm, fm};
        out.push_back(best);
    }
    return out;
}

struct GridPoint {
    double t{0.0};
    double temperature{0.0};
};

struct DeviationStats {
    double max{0.0};
    double mean{0.0};
    GridPoint at;
};

struct ComponentDisagreement {
    std::string label;
    double max_deviation{0.0};
    GridPoint at;
};

struct CompareReport {
    std::size_t points{0};
    DeviationStats mtf;
    DeviationStats fidelity;
    // max over the grid of |F0000 + F0011 - 1| and |F1100 + F1111 - 1|
    double sum_rule_exact{0.0};
    double sum_rule_weisskopf{0.0};
    std::vector<ComponentDisagreement> disagreeing;  // beyond kComponentTolerance
    Peak first_peak_exact;
    Peak first_peak_weisskopf;
    double first_peak_relative_deviation{0.0};
    std::vector<std::string> warnings;

    static constexpr double kComponentTolerance = 1e-2;
    static constexpr double kLargeDeviation = 0.1;
};

// Runs the scenario's grid with both solvers (whatever `solver` says) and summarizes.
inline CompareReport compare_report(const Scenario& scenario, unsigned threads = 0) {
    Scenario s = scenario;
    s.solver = SolverKind::compare;
    const auto rows = run_sweep(s, threads);

    CompareReport rep;
    rep.points = rows.size() / 2;
    std::array<double, 16> comp_max{};
    std::array<GridPoint, 16> comp_at{};
    for (std::size_t p = 0; p < rep.points; ++p) {
        const auto& ex = rows[2 * p];
        const auto& wk = rows[2 * p + 1];
        const GridPoint here{ex.t, ex.temperature};
        auto track = [&](DeviationStats& st, double dev) {
            st.mean += dev;
            if (dev > st.max) st.max = dev, st.at = here;
        };
        track(rep.mtf, *ex.dev_mtf);
        track(rep.fidelity, *ex.dev_fidelity);
        auto sum_rule = [](const FidelityComponents& f) {
            return std::max(std::abs(f.at(0, 0, 0, 0) + f.at(0, 0, 1, 1) - 1.0),
                            std::abs(f.at(1, 1, 0, 0) + f.at(1, 1, 1, 1) - 1.0));
        };
        rep.sum_rule_exact = std::max(rep.sum_rule_exact, sum_rule(ex.components));
        rep.sum_rule_weisskopf = std::max(rep.sum_rule_weisskopf, sum_rule(wk.components));
        for (std::size_t k = 0; k < 16; ++k) {
            const double dev = std::abs(ex.components.values[k] - wk.components.values[k]);
            if (dev > comp_max[k]) comp_max[k] = dev, comp_at[k] = here;
        }
    }
    if (rep.points > 0) {
        rep.mtf.mean /= static_cast<double>(rep.points);
        rep.fidelity.mean /= static_cast<double>(rep.points);
    }
    for (std::size_t k = 0; k < 16; ++k)
        if (comp_max[k] > CompareReport::kComponentTolerance)
            rep.disagreeing.push_back({FidelityComponents::label(k), comp_max[k], comp_at[k]});

    // First transfer peak on its own fine grid; MTF does not depend on T.
    const SweepEvaluator eval(s);
    const double theta = s.chain.theta;
    rep.first_peak_exact = window_maxima([&](double t) { return eval.exact()->mtf(t); }, theta, 1).front();
    rep.first_peak_weisskopf = window_maxima([&](double t) { return eval.weisskopf()->mtf(t); }, theta, 1).front();
    rep.first_peak_relative_deviation =
        rep.first_peak_exact.height > 0.0
            ? std::abs(rep.first_peak_weisskopf.height - rep.first_peak_exact.height) / rep.first_peak_exact.height
            : 0.0;

    if (rep.mtf.max > CompareReport::kLargeDeviation)
        rep.warnings.push_back("large mtf deviation between exact and weisskopf (" + std::to_string(rep.mtf.max) +
                               "); coupling likely outside the weak-coupling regime");
    if (rep.fidelity.max > CompareReport::kLargeDeviation)
        rep.warnings.push_back("large fidelity deviation between exact and weisskopf (" +
                               std::to_string(rep.fidelity.max) + ")");
    if (rep.first_peak_relative_deviation > CompareReport::kLargeDeviation)
        rep.warnings.push_back("first transfer peak differs by " +
                               std::to_string(100.0 * rep.first_peak_relative_deviation) + "%");
    if (rep.sum_rule_exact > 1e-10 || rep.sum_rule_weisskopf > 1e-10)
        rep.warnings.push_back("trace sum rule violated beyond 1e-10");
    return rep;
}

}  // namespace pstbath
