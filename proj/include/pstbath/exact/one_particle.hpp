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

// one_particle.hpp — single-particle Hamiltonian of chain + bath and its propagator.
//
// Index layout: 0..N-1 chain sites, N..N+M-1 bath sites.

#pragma once

#include <Eigen/Dense>

#include <complex>
#include <cstddef>
#include <string>

#include "pstbath/core/chain.hpp"
#include "pstbath/core/system_model.hpp"
#include "pstbath/errors.hpp"

namespace pstbath {

struct OneParticleHamiltonian {
    Eigen::MatrixXd matrix;
    std::size_t n_chain{0};
    std::size_t n_bath{0};
};

inline OneParticleHamiltonian assemble_one_particle_h(const SystemModel& model) {
    const auto n = static_cast<Eigen::Index>(model.n());
    const auto m = static_cast<Eigen::Index>(model.m());
    Eigen::MatrixXd h = Eigen::MatrixXd::Zero(n + m, n + m);
    h.topLeftCorner(n, n) = chain_hamiltonian(model.chain);
    h.topLeftCorner(n, n).diagonal().array() += model.chain.onsite_energy();
    const auto& w = model.bath_energies();
    for (Eigen::Index x = 0; x < m; ++x) h(n + x, n + x) = w[static_cast<std::size_t>(x)];
    h.topRightCorner(n, m) = model.g;
    h.bottomLeftCorner(m, n) = model.g.transpose();
    return {std::move(h), model.n(), model.m()};
}

// exp(-i h t). Unitary; P(0) = I; P(t1 + t2) = P(t1) P(t2).
struct Propagator {
    Eigen::MatrixXcd matrix;
    double time{0.0};
};

// Eigendecomposition of h, shared read-only across evaluations at many t.
class SpectralPropagator {
  public:
    explicit SpectralPropagator(const Eigen::MatrixXd& h) {
        if (h.rows() != h.cols()) throw ShapeError("propagator: Hamiltonian must be square");
        if (h.size() > 0 && (h - h.transpose()).cwiseAbs().maxCoeff() > 1e-12)
            throw NumericError("propagator: Hamiltonian is not symmetric");
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(h);
        if (solver.info() != Eigen::Success)
            throw NumericError("propagator: eigensolve failed for " + std::to_string(h.rows()) + "x" +
                               std::to_string(h.cols()) + " Hamiltonian (Eigen info " +
                               std::to_string(static_cast<int>(solver.info())) + ")");
        eigenvalues_ = solver.eigenvalues();
        eigenvectors_ = solver.eigenvectors();
    }

    Propagator at(double t) const {
        const Eigen::VectorXcd phases =
            (eigenvalues_.cast<std::complex<double>>() * std::complex<double>(0.0, -t)).array().exp();
        Eigen::MatrixXcd p = eigenvectors_.cast<std::complex<double>>() * phases.asDiagonal() *
                             eigenvectors_.transpose().cast<std::complex<double>>();
        return {std::move(p), t};
    }

    // Row `site` of exp(-i h t): coefficients of a_site(t) on the initial modes.
    Eigen::VectorXcd row(Eigen::Index site, double t) const {
        const Eigen::VectorXcd phases =
            (eigenvalues_.cast<std::complex<double>>() * std::complex<double>(0.0, -t)).array().exp();
        Eigen::VectorXcd weighted = eigenvectors_.row(site).transpose().cast<std::complex<double>>().cwiseProduct(phases);
        return eigenvectors_.cast<std::complex<double>>() * weighted;
    }

    const Eigen::VectorXd& eigenvalues() const noexcept { return eigenvalues_; }
    const Eigen::MatrixXd& eigenvectors() const noexcept { return eigenvectors_; }

  private:
    Eigen::VectorXd eigenvalues_;
    Eigen::MatrixXd eigenvectors_;
};

inline Propagator propagator(const OneParticleHamiltonian& h, double t) { return SpectralPropagator(h.matrix).at(t); }

}  // namespace pstbath
