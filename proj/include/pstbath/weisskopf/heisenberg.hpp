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

// heisenberg.hpp — Wigner-Weisskopf solution for the interaction-picture mode operators.
//
//   C_m^dag(t) = e^{-Gamma_m t} C_m^dag
//              + sum_x beta_{mx}(t) B_x^dag
//              + sum_{l != m} kappa_{ml}(t) C_l^dag
//
//   beta_{mx}(t)  = i g~_{mx} (e^{-Gamma_m t} - e^{-i Delta_{mx} t}) / (i Delta_{mx} - Gamma_m),
//   Delta_{mx}    = eps_m - omega_x,
//   kappa_{ml}(t) = -sum_x g~_{mx} g~_{lx} e^{-Gamma_m t} / [(i Delta_{mx} - Gamma_m)(i (eps_m - eps_l) - Gamma_m)].
//
// beta keeps both poles of the Markovian solution, so it vanishes at t = 0. kappa is the
// cross-mode term; no observable uses it.

#pragma once

#include <Eigen/Dense>

#include <cmath>
#include <complex>
#include <cstddef>

#include "pstbath/core/system_model.hpp"
#include "pstbath/weisskopf/decay_rates.hpp"

namespace pstbath {

struct HeisenbergSolution {
    double time{0.0};
    Eigen::VectorXd decay_factor;   // e^{-Gamma_m t}
    Eigen::MatrixXcd bath_feed;     // beta, N x M
    Eigen::MatrixXcd cross_mode;    // kappa, N x N, zero diagonal
};

inline HeisenbergSolution heisenberg_solution(const SystemModel& model, const DecayRates& rates, double t) {
    using C = std::complex<double>;
    const auto n = static_cast<Eigen::Index>(model.n());
    const auto m = static_cast<Eigen::Index>(model.m());
    const auto& w = model.bath_energies();
    const C i{0.0, 1.0};

    HeisenbergSolution sol;
    sol.time = t;
    sol.decay_factor.resize(n);
    sol.bath_feed = Eigen::MatrixXcd::Zero(n, m);
    sol.cross_mode = Eigen::MatrixXcd::Zero(n, n);

    for (Eigen::Index a = 0; a < n; ++a) {
        const double gamma = rates.gamma[static_cast<std::size_t>(a)];
        const double eps = rates.mode_energy[static_cast<std::size_t>(a)];
        const double decay = std::exp(-gamma * t);
        sol.decay_factor(a) = decay;
        for (Eigen::Index x = 0; x < m; ++x) {
            const double gt = model.g_tilde(a, x);
            if (gt == 0.0) continue;
            const double delta = eps - w[static_cast<std::size_t>(x)];
            const C denom = i * delta - gamma;
            // Exactly on resonance with no decay the integral is t.
            sol.bath_feed(a, x) = std::abs(denom) == 0.0 ? i * gt * t
                                                         : i * gt * (decay - std::exp(-i * delta * t)) / denom;
        }
        for (Eigen::Index b = 0; b < n; ++b) {
            if (b == a) continue;
            const C mode_denom = i * (eps - rates.mode_energy[static_cast<std::size_t>(b)]) - gamma;
            C acc{0.0, 0.0};
            for (Eigen::Index x = 0; x < m; ++x) {
                const double num = model.g_tilde(a, x) * model.g_tilde(b, x);
                if (num == 0.0) continue;
                acc -= num / ((i * (eps - w[static_cast<std::size_t>(x)]) - gamma) * mode_denom);
            }
            sol.cross_mode(a, b) = acc * decay;
        }
    }
    return sol;
}

}  // namespace pstbath
