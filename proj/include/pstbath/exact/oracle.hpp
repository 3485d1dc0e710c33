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

// oracle.hpp — exact transfer function and fidelity components of the quadratic model.
//
// The full Hamiltonian is quadratic and conserves particle number, so a_k(t) = sum_q P(t)[k,q] f_q
// with P(t) = exp(-i h t). The initial state (chain vacuum, thermal bath) is Gaussian with
// occupations nu = (0,..,0, n(omega_1),..,n(omega_M)); every component reduces to a Wick
// expansion of at most four linear operators.

#pragma once

#include <Eigen/Dense>

#include <complex>
#include <cstddef>
#include <vector>

#include "pstbath/core/system_model.hpp"
#include "pstbath/exact/one_particle.hpp"
#include "pstbath/exact/thermal.hpp"
#include "pstbath/exact/wick.hpp"
#include "pstbath/fidelity.hpp"

namespace pstbath {

class ExactSolver {
  public:
    explicit ExactSolver(const SystemModel& model)
        : model_(model), hamiltonian_(assemble_one_particle_h(model)), spectral_(hamiltonian_.matrix) {}

    Propagator propagator(double t) const { return spectral_.at(t); }

    // |P(t)[N,1]|^2 with the bath in its vacuum.
    double mtf(double t) const {
        const auto row = spectral_.row(last_site(), t);
        return std::norm(row(0));
    }

    GaussianState initial_state(double temperature) const {
        const auto n = static_cast<Eigen::Index>(model_.n());
        const auto m = static_cast<Eigen::Index>(model_.m());
        Eigen::VectorXd nu = Eigen::VectorXd::Zero(n + m);
        const auto& w = model_.bath_energies();
        for (Eigen::Index x = 0; x < m; ++x) nu(n + x) = thermal_occupation(w[static_cast<std::size_t>(x)], temperature);
        return GaussianState(std::move(nu));
    }

    FidelityComponents components(double t, double temperature) const {
        const GaussianState state = initial_state(temperature);
        const Eigen::Index dim = hamiltonian_.matrix.rows();
        const Eigen::VectorXcd row = spectral_.row(last_site(), t);

        const auto a1 = LinearOperator::site_annihilate(dim, 0);
        const auto a1_dag = LinearOperator::site_create(dim, 0);
        const auto aN_t = LinearOperator::annihilate(row);
        const auto aN_dag_t = LinearOperator::create(row.conjugate());

        FidelityComponents f;
        std::vector<LinearOperator> ops;
        auto product = [&](int i, int j, std::initializer_list<const LinearOperator*> middle) {
            // tr[rho_ij A] with rho_10 = a1^dag rho, rho_01 = rho a1, rho_11 = a1^dag rho a1.
            ops.clear();
            if (j == 1) ops.push_back(a1);
            for (const auto* op : middle) ops.push_back(*op);
            if (i == 1) ops.push_back(a1_dag);
            return state.expectation(ops);
        };

        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j)
                for (int l = 0; l < 2; ++l)
                    for (int m = 0; m < 2; ++m) {
                        if ((i + j + l + m) % 2 == 1) continue;  // odd operator count
                        cplx value;
                        if (l == 1 && m == 1) {
                            value = product(i, j, {&aN_dag_t, &aN_t});
                        } else if (l == 0 && m == 0) {
                            value = product(i, j, {}) - product(i, j, {&aN_dag_t, &aN_t});
                        } else if (l == 1) {
                            value = product(i, j, {&aN_dag_t});
                        } else {
                            value = product(i, j, {&aN_t});
                        }
                        f.at(i, j, l, m) = value;
                    }
        return f;
    }

    double fidelity(double t, double temperature, const QubitAmplitudes& amps, bool phase_compensation = false) const {
        const cplx phase = phase_compensation ? bath_free_transfer_phase(model_.n(), model_.chain.theta,
                                                                         model_.chain.onsite_energy(), t)
                                              : cplx{1.0, 0.0};
        return weighted_fidelity(components(t, temperature), amps, phase);
    }

    const OneParticleHamiltonian& hamiltonian() const noexcept { return hamiltonian_; }
    const SpectralPropagator& spectral() const noexcept { return spectral_; }
    const SystemModel& model() const noexcept { return model_; }

  private:
    Eigen::Index last_site() const { return static_cast<Eigen::Index>(model_.n()) - 1; }

    SystemModel model_;
    OneParticleHamiltonian hamiltonian_;
    SpectralPropagator spectral_;
};

inline double mtf_exact(const SystemModel& model, double t) { return ExactSolver(model).mtf(t); }

inline FidelityComponents fidelity_components_exact(const SystemModel& model, double t, double temperature) {
    return ExactSolver(model).components(t, temperature);
}

inline double fidelity_exact(const SystemModel& model, double t, double temperature, const QubitAmplitudes& amps,
                             bool phase_compensation = false) {
    amps.validate();
    return ExactSolver(model).fidelity(t, temperature, amps, phase_compensation);
}

}  // namespace pstbath
