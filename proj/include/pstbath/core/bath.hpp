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

// bath.hpp — M independent fermionic two-level sites with on-site energies omega_x.

#pragma once

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "pstbath/errors.hpp"

namespace pstbath {

struct BathSpec {
    std::size_t m_sites{1};
    double energy_mean{0.0};
    double energy_std{0.0};
    std::uint64_t seed{0};
    // Overrides sampling when present.
    std::optional<std::vector<double>> energies;
    // Bath site x sits at position x + offset on the chain axis.
    long offset{0};

    void validate() const {
        if (m_sites < 1) throw DomainError("invalid bath: M must be >= 1");
        if (!(energy_std >= 0.0) || !std::isfinite(energy_std)) throw DomainError("invalid bath: energy_std must be >= 0");
        if (!std::isfinite(energy_mean)) throw DomainError("invalid bath: energy_mean must be finite");
        if (energies && energies->size() != m_sites)
            throw ShapeError("invalid bath: " + std::to_string(energies->size()) + " explicit energies for M = " +
                             std::to_string(m_sites));
    }
};

// Draws omega_1..omega_M ~ Normal(mean, std^2) from mt19937_64(seed). Same seed, same sequence.
inline std::vector<double> sample_bath_energies(const BathSpec& bath) {
    bath.validate();
    if (bath.energies) return *bath.energies;
    std::vector<double> out(bath.m_sites, bath.energy_mean);
    if (bath.energy_std == 0.0) return out;
    std::mt19937_64 rng(bath.seed);
    std::normal_distribution<double> normal(bath.energy_mean, bath.energy_std);
    for (auto& w : out) w = normal(rng);
    return out;
}

}  // namespace pstbath
