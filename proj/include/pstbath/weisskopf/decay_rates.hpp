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

// decay_rates.hpp — golden-rule decay rates of the chain normal modes.
//
//   Gamma_m = pi sum_x |g~_{mx}|^2 delta_eta(omega_x - eps_m)
//
// delta_eta is a unit-normalized Gaussian of standard deviation eta; the bath is discrete, so
// the delta function has to be broadened. eps_m is the energy of normal mode m.

#pragma once

#include <Eigen/Dense>

#include <cmath>
#include <cstddef>
#include <numbers>
#include <string>
#include <vector>

#include "pstbath/core/system_model.hpp"
#include "pstbath/errors.hpp"
#include "pstbath/exact/thermal.hpp"

namespace pstbath {

inline double broadened_delta(double x, double eta) {
    return std::exp(-0.5 * x * x / (eta * eta)) / (eta * std::sqrt(2.0 * std::numbers::pi));
}

struct DecayRates {
    std::vector<double> gamma;      // Gamma_1..Gamma_N
    std::vector<double> mode_energy;
    double eta{0.25};
    // resonance(m, x) = pi |g~_{mx}|^2 delta_eta(omega_x - eps_m); row sums are Gamma_m.
    Eigen::MatrixXd resonance;

    std::size_t size() const noexcept { return gamma.size(); }

    // Occupation of the bath states that mode m decays into: the resonance-weighted mean of n(omega_x, T).
    double feed_occupation(std::size_t m, const std::vector<double>& bath_energies, double temperature) const {
        const auto row = static_cast<Eigen::Index>(m);
        double weight = 0.0;
        double acc = 0.0;
        for (Eigen::Index x = 0; x < resonance.cols(); ++x) {
            const double w = resonance(row, x);
            weight += w;
            acc += w * thermal_occupation(bath_energies[static_cast<std::size_t>(x)], temperature);
        }
        if (weight > 0.0) return acc / weight;
        return thermal_occupation(mode_energy[m], temperature);
    }

    // Same resonance weights, every rate replaced by `rate`.
    DecayRates with_uniform_rate(double rate) const {
        if (!(rate >= 0.0)) throw DomainError("decay rate must be >= 0");
        DecayRates out = *this;
        for (auto& g : out.gamma) g = rate;
        return out;
    }
};

inline DecayRates decay_rates(const SystemModel& model, double eta) {
    if (!(eta > 0.0) || !std::isfinite(eta)) throw DomainError("decay_rates: broadening eta must be > 0, got " + std::to_string(eta));
    const std::size_t n = model.n();
    const std::size_t m = model.m();
    const auto& w = model.bath_energies();

    DecayRates rates;
    rates.eta = eta;
    rates.gamma.assign(n, 0.0);
    rates.mode_energy.resize(n);
    rates.resonance = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(m));
    for (std::size_t mode = 0; mode < n; ++mode) {
        const double eps = model.chain.mode_energy(mode + 1);
        rates.mode_energy[mode] = eps;
        double total = 0.0;
        for (std::size_t x = 0; x < m; ++x) {
            const double gt = model.g_tilde(static_cast<Eigen::Index>(mode), static_cast<Eigen::Index>(x));
            const double r = std::numbers::pi * gt * gt * broadened_delta(w[x] - eps, eta);
            rates.resonance(static_cast<Eigen::Index>(mode), static_cast<Eigen::Index>(x)) = r;
            total += r;
        }
        rates.gamma[mode] = total;
    }
    return rates;
}

}  // namespace pstbath
