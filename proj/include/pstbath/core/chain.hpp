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

// chain.hpp — engineered hopping chain with couplings J_l = sqrt(l (N - l)).

#pragma once

#include <Eigen/Dense>

#include <cmath>
#include <cstddef>
#include <string>
#include <vector>

#include "pstbath/errors.hpp"

namespace pstbath {

// Where the chain's one-particle spectrum sits on the energy axis.
//   mode_grid: on-site energy theta (N+1)/2, so the normal modes sit at theta * m, m = 1..N.
//   centered:  zero on-site energy, normal modes at theta (m - (N+1)/2).
enum class EnergyOrigin { mode_grid, centered };

inline const char* to_string(EnergyOrigin o) noexcept {
    return o == EnergyOrigin::mode_grid ? "mode_grid" : "centered";
}

// Energies in units of theta, hbar = 1.
struct ChainSpec {
    std::size_t n_sites{2};
    double theta{1.0};
    EnergyOrigin origin{EnergyOrigin::mode_grid};

    void validate() const {
        if (n_sites < 2) throw DomainError("invalid chain: N must be >= 2, got " + std::to_string(n_sites));
        if (!(theta > 0.0) || !std::isfinite(theta)) throw DomainError("invalid chain: theta must be > 0");
    }

    // Diagonal energy added to every chain site in the one-particle Hamiltonian.
    double onsite_energy() const noexcept {
        return origin == EnergyOrigin::mode_grid ? theta * 0.5 * static_cast<double>(n_sites + 1) : 0.0;
    }

    // Energy of normal mode m (1-based).
    double mode_energy(std::size_t m) const noexcept {
        return onsite_energy() + theta * (static_cast<double>(m) - 0.5 * static_cast<double>(n_sites + 1));
    }
};

// J_1 .. J_{N-1}.
inline std::vector<double> hopping_amplitudes(const ChainSpec& chain) {
    chain.validate();
    const std::size_t n = chain.n_sites;
    std::vector<double> j(n - 1);
    for (std::size_t l = 1; l < n; ++l) j[l - 1] = std::sqrt(static_cast<double>(l * (n - l)));
    return j;
}

// Single-particle block of H_s: tridiagonal, (theta/2) J_l on the off-diagonals, zero diagonal.
inline Eigen::MatrixXd chain_hamiltonian(const ChainSpec& chain) {
    const auto j = hopping_amplitudes(chain);
    const auto n = static_cast<Eigen::Index>(chain.n_sites);
    Eigen::MatrixXd h = Eigen::MatrixXd::Zero(n, n);
    for (Eigen::Index l = 0; l + 1 < n; ++l) {
        h(l, l + 1) = 0.5 * chain.theta * j[static_cast<std::size_t>(l)];
        h(l + 1, l) = h(l, l + 1);
    }
    return h;
}

}  // namespace pstbath
