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

// solver.hpp — perturbative transfer function and fidelity components.
//
// Cross terms g~_{mx} g~_{lx} with m != l are dropped. Under that rule the site-N operator is
//
//   a_N(t) = sum_m d_{Nm} [ e^{-(i eps_m + Gamma_m) t} c_m + bath feed ],
//
// and the bath feed of mode m contributes, after thermal averaging with the same broadened
// delta that defines Gamma_m,
//
//   sum_x |beta_{mx}(t)|^2 n_x  ->  (1 - e^{-2 Gamma_m t}) nbar_m(T).
//
// With A(t) = sum_m d_{Nm} d_{1m} e^{-(i eps_m + Gamma_m) t} the surviving components are
//
//   F0011 = sum_m d_{Nm}^2 (1 - e^{-2 Gamma_m t}) nbar_m
//   F0000 = sum_m d_{Nm}^2 [e^{-2 Gamma_m t} + (1 - e^{-2 Gamma_m t})(1 - nbar_m)]
//   F1111 = |A|^2 + F0011        F1100 = F0000 - |A|^2
//   F1001 = A                    F0110 = conj(A)
//
// and the remaining ten vanish (odd operator count or particle number not conserved).

#pragma once

#include <cmath>
#include <complex>
#include <cstddef>
#include <numbers>
#include <string>
#include <vector>

#include "pstbath/core/system_model.hpp"
#include "pstbath/errors.hpp"
#include "pstbath/fidelity.hpp"
#include "pstbath/weisskopf/decay_rates.hpp"

namespace pstbath {

// Closed form for equal rates: (sin(theta t / 2))^{2(N-1)} e^{-2 Gamma t}.
inline double mtf_closed_form(std::size_t n_sites, double theta, double gamma, double t) {
    if (!(gamma >= 0.0)) throw DomainError("mtf_closed_form: gamma must be >= 0");
    const double s = std::sin(0.5 * theta * t);
    return std::pow(s * s, static_cast<double>(n_sites - 1)) * std::exp(-2.0 * gamma * t);
}

class WeisskopfSolver {
  public:
    WeisskopfSolver(const SystemModel& model, DecayRates rates) : model_(model), rates_(std::move(rates)) {
        if (rates_.size() != model_.n())
            throw ShapeError("weisskopf: " + std::to_string(rates_.size()) + " decay rates for N = " +
                             std::to_string(model_.n()));
    }

    // sum_{m,n} d_{mN}(-pi/2) d_{Nn}(pi/2) d_{1m}(pi/2) d_{n1}(-pi/2) e^{i (eps_m - eps_n) t - (Gamma_m + Gamma_n) t}
    double mtf(double t) const {
        const std::size_t n = model_.n();
        const auto& d = model_.d;
        cplx sum{0.0, 0.0};
        for (std::size_t a = 1; a <= n; ++a)
            for (std::size_t b = 1; b <= n; ++b) {
                const double weight = d(n, a) * d(n, b) * d(1, a) * d(1, b);
                const double de = rates_.mode_energy[a - 1] - rates_.mode_energy[b - 1];
                const double decay = (rates_.gamma[a - 1] + rates_.gamma[b - 1]) * t;
                sum += weight * std::exp(cplx{-decay, de * t});
            }
        if (std::abs(sum.imag()) > kImaginaryResidueTolerance)
            throw NumericError("mtf_weisskopf: imaginary residue " + std::to_string(sum.imag()));
        if (sum.real() < -1e-8 || sum.real() > 1.0 + 1e-8)
            throw NumericError("mtf_weisskopf: value " + std::to_string(sum.real()) +
                               " outside [0, 1]; perturbative solution invalid here");
        return sum.real();
    }

    // Site-1 to site-N transfer amplitude <a_N(t) a_1^dag>.
    cplx amplitude(double t) const {
        const std::size_t n = model_.n();
        cplx a{0.0, 0.0};
        for (std::size_t m = 1; m <= n; ++m)
            a += model_.d(n, m) * model_.d(1, m) *
                 std::exp(cplx{-rates_.gamma[m - 1] * t, -rates_.mode_energy[m - 1] * t});
        return a;
    }

    FidelityComponents components(double t, double temperature) const {
        const std::size_t n = model_.n();
        double f0000 = 0.0;
        double f0011 = 0.0;
        for (std::size_t m = 1; m <= n; ++m) {
            const double weight = model_.d(n, m) * model_.d(n, m);
            const double survive = std::exp(-2.0 * rates_.gamma[m - 1] * t);
            const double fed = 1.0 - survive;
            const double nbar = rates_.feed_occupation(m - 1, model_.bath_energies(), temperature);
            f0011 += weight * fed * nbar;
            f0000 += weight * (survive + fed * (1.0 - nbar));
        }
        const cplx a = amplitude(t);
        const double transfer = std::norm(a);

        FidelityComponents f;
        f.at(0, 0, 0, 0) = f0000;
        f.at(0, 0, 1, 1) = f0011;
        f.at(1, 1, 1, 1) = transfer + f0011;
        f.at(1, 1, 0, 0) = f0000 - transfer;
        f.at(1, 0, 0, 1) = a;
        f.at(0, 1, 1, 0) = std::conj(a);
        return f;
    }

    double fidelity(double t, double temperature, const QubitAmplitudes& amps, bool phase_compensation = false) const {
        const cplx phase = phase_compensation ? bath_free_transfer_phase(model_.n(), model_.chain.theta,
                                                                         model_.chain.onsite_energy(), t)
                                              : cplx{1.0, 0.0};
        return weighted_fidelity(components(t, temperature), amps, phase);
    }

    const DecayRates& rates() const noexcept { return rates_; }
    const SystemModel& model() const noexcept { return model_; }

  private:
    SystemModel model_;
    DecayRates rates_;
};

inline double mtf_weisskopf(const SystemModel& model, const DecayRates& rates, double t) {
    return WeisskopfSolver(model, rates).mtf(t);
}

inline FidelityComponents fidelity_components_weisskopf(const SystemModel& model, const DecayRates& rates, double t,
                                                        double temperature) {
    if (!(temperature >= 0.0)) throw DomainError("temperature must be >= 0");
    return WeisskopfSolver(model, rates).components(t, temperature);
}

inline double fidelity_weisskopf(const SystemModel& model, const DecayRates& rates, double t, double temperature,
                                 const QubitAmplitudes& amps, bool phase_compensation = false) {
    amps.validate();
    return WeisskopfSolver(model, rates).fidelity(t, temperature, amps, phase_compensation);
}

}  // namespace pstbath
