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


// sweep.hpp — evaluate a Scenario over its (T, t) grid.

#pragma once

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdint>
#include <exception>
#include <memory>
#include <numeric>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "pstbath/exact/oracle.hpp"
#include "pstbath/scenario/scenario.hpp"
#include "pstbath/weisskopf/decay_rates.hpp"
#include "pstbath/weisskopf/solver.hpp"

namespace pstbath {

struct SweepRow {
    SolverKind solver{SolverKind::weisskopf};
    std::uint64_t seed{0};
    std::size_t n{0};
    std::size_t m{0};
    double t{0.0};
    double temperature{0.0};
    double mtf{0.0};
    double fidelity{0.0};
    FidelityComponents components;
    // compare mode: |exact - weisskopf| at the same grid point, on both rows
    std::optional<double> dev_mtf;
    std::optional<double> dev_fidelity;
};

inline constexpr double kMtfRangeSlack = 1e-8;

// The solvers of one scenario, built once and shared read-only by all sweep workers.
class SweepEvaluator {
  public:
    explicit SweepEvaluator(const Scenario& s) : scenario_(s), model_(s.model()) {
        const bool need_exact = s.solver == SolverKind::exact || s.solver == SolverKind::compare;
        if (need_exact) exact_ = std::make_unique<ExactSolver>(model_);
        if (s.solver != SolverKind::exact) {
            auto rates = decay_rates(model_, s.eta);
            if (s.solver == SolverKind::closed_form) {
                gamma_ = s.gamma.value_or(rates.gamma.empty() ? 0.0
                                                              : std::accumulate(rates.gamma.begin(), rates.gamma.end(), 0.0) /
                                                                    static_cast<double>(rates.gamma.size()));
                rates = rates.with_uniform_rate(gamma_);
            }
            weisskopf_ = std::make_unique<WeisskopfSolver>(model_, std::move(rates));
        }
    }

    // Solvers this scenario emits, in row order.
    std::vector<SolverKind> solvers() const {
        if (scenario_.solver == SolverKind::compare) return {SolverKind::exact, SolverKind::weisskopf};
        return {scenario_.solver};
    }

    SweepRow evaluate(SolverKind which, double t, double temperature) const {
        SweepRow row;
        row.solver = which;
        row.seed = scenario_.bath.seed;
        row.n = model_.n();
        row.m = model_.m();
        row.t = t;
        row.temperature = temperature;
        const bool compensate = scenario_.phase_compensation;
        switch (which) {
            case SolverKind::exact:
                row.mtf = exact_->mtf(t);
                row.components = exact_->components(t, temperature);
                break;
            case SolverKind::weisskopf:
                row.mtf = weisskopf_->mtf(t);
                row.components = weisskopf_->components(t, temperature);
                break;
            case SolverKind::closed_form:
                row.mtf = mtf_closed_form(model_.n(), model_.chain.theta, gamma_, t);
                row.components = weisskopf_->components(t, temperature);
                break;
            case SolverKind::compare:
                throw DomainError("evaluate: compare is not a single solver");
        }
        const cplx phase = compensate ? bath_free_transfer_phase(model_.n(), model_.chain.theta,
                                                                 model_.chain.onsite_energy(), t)
                                      : cplx{1.0, 0.0};
        row.fidelity = weighted_fidelity(row.components, scenario_.amplitudes, phase);
        check_finite(row);
        return row;
    }

    const SystemModel& model() const noexcept { return model_; }
    const Scenario& scenario() const noexcept { return scenario_; }
    const ExactSolver* exact() const noexcept { return exact_.get(); }
    const WeisskopfSolver* weisskopf() const noexcept { return weisskopf_.get(); }
    double closed_form_gamma() const noexcept { return gamma_; }

  private:
    static void check_finite(const SweepRow& row) {
        bool ok = std::isfinite(row.mtf) && std::isfinite(row.fidelity);
        for (const auto& z : row.components.values) ok = ok && std::isfinite(z.real()) && std::isfinite(z.imag());
        if (!ok) throw NumericError("non-finite value");
        if (row.mtf < -kMtfRangeSlack || row.mtf > 1.0 + kMtfRangeSlack)
            throw NumericError("mtf = " + std::to_string(row.mtf) + " outside [0, 1]");
    }

    Scenario scenario_;
    SystemModel model_;
    std::unique_ptr<ExactSolver> exact_;
    std::unique_ptr<WeisskopfSolver> weisskopf_;
    double gamma_{0.0};
};

// Rows ordered by (T, t); compare mode emits the exact row, then the weisskopf row, per point.
// Grid points are independent and evaluated on `threads` workers (0 = hardware concurrency);
// the output does not depend on the thread count.
inline std::vector<SweepRow> run_sweep(const Scenario& s, unsigned threads = 0) {
    validate(s);
    const SweepEvaluator eval(s);
    const auto times = s.time.points();
    const auto temps = s.temperature_points();
    const auto solvers = eval.solvers();
    const std::size_t points = times.size() * temps.size();
    const std::size_t per_point = solvers.size();

    std::vector<SweepRow> rows(points * per_point);
    std::vector<std::exception_ptr> errors(points);

    auto work = [&](std::size_t p) {
        const double temperature = temps[p / times.size()];
        const double t = times[p % times.size()];
        try {
            for (std::size_t k = 0; k < per_point; ++k) rows[p * per_point + k] = eval.evaluate(solvers[k], t, temperature);
        } catch (const NumericError& e) {
            char where[96];
            std::snprintf(where, sizeof where, "at t = %.12g, T = %.12g: ", t, temperature);
            errors[p] = std::make_exception_ptr(NumericError(where + std::string(e.what())));
        } catch (...) {
            errors[p] = std::current_exception();
        }
    };

    if (threads == 0) threads = std::max(1U, std::thread::hardware_concurrency());
    threads = static_cast<unsigned>(std::min<std::size_t>(threads, points));
    if (threads <= 1) {
        for (std::size_t p = 0; p < points; ++p) work(p);
    } else {
        std::atomic<std::size_t> next{0};
        std::vector<std::thread> pool;
        for (unsigned w = 0; w < threads; ++w)
            pool.emplace_back([&] {
                for (std::size_t p = next++; p < points; p = next++) work(p);
            });
        for (auto& th : pool) th.join();
    }
    // Report the first failing point in grid order, whichever worker hit it.
    for (const auto& e : errors)
        if (e) std::rethrow_exception(e);

    if (s.solver == SolverKind::compare)
        for (std::size_t p = 0; p < points; ++p) {
            auto& ex = rows[p * 2];
            auto& wk = rows[p * 2 + 1];
            const double dm = std::abs(ex.mtf - wk.mtf);
            const double df = std::abs(ex.fidelity - wk.fidelity);
            ex.dev_mtf = wk.dev_mtf = dm;
            ex.dev_fidelity = wk.dev_fidelity = df;
        }
    return rows;
}

}  // namespace pstbath
