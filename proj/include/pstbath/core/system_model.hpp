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

// system_model.hpp — assembled chain + bath + couplings.

#pragma once

#include <Eigen/Dense>

#include <cstddef>
#include <vector>

#include "pstbath/core/bath.hpp"
#include "pstbath/core/chain.hpp"
#include "pstbath/core/coupling.hpp"
#include "pstbath/core/wigner_d.hpp"

namespace pstbath {

struct SystemModel {
    ChainSpec chain;
    BathSpec bath;                      // bath.energies always populated
    Eigen::MatrixXd g;                  // N x M site couplings
    Eigen::MatrixXd g_tilde;            // N x M normal-mode couplings
    WignerD d;                          // d(pi/2), columns are normal modes

    std::size_t n() const noexcept { return chain.n_sites; }
    std::size_t m() const noexcept { return bath.m_sites; }
    const std::vector<double>& bath_energies() const { return *bath.energies; }
};

inline SystemModel make_system_model(const ChainSpec& chain, BathSpec bath, const CouplingModel& coupling) {
    chain.validate();
    bath.validate();
    bath.energies = sample_bath_energies(bath);
    SystemModel model;
    model.chain = chain;
    model.d = wigner_d(chain.n_sites);
    model.g = coupling_matrix(coupling, chain.n_sites, bath.m_sites, chain.theta, bath.offset);
    model.g_tilde = transform_couplings(model.g, model.d);
    model.bath = std::move(bath);
    return model;
}

}  // namespace pstbath
