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

// fidelity.hpp — the sixteen fidelity components F_{ijlm} and the qubit-fidelity weighting.
//
// F_{ijlm} = tr[ U |i_1><j_1| rho_B U^dag |l_N><m_N| ],  i, j, l, m in {0, 1}.
// For source/target amplitudes (c0, c1):  F = sum c_i c_j^* c_l c_m^* F_{ijlm}.

#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <cstddef>
#include <string>

#include "pstbath/errors.hpp"

namespace pstbath {

using cplx = std::complex<double>;

struct FidelityComponents {
    std::array<cplx, 16> values{};

    static constexpr std::size_t index(int i, int j, int l, int m) noexcept {
        return static_cast<std::size_t>(8 * i + 4 * j + 2 * l + m);
    }
    cplx& at(int i, int j, int l, int m) noexcept { return values[index(i, j, l, m)]; }
    const cplx& at(int i, int j, int l, int m) const noexcept { return values[index(i, j, l, m)]; }

    // "F0110" style label for flat index k.
    static std::string label(std::size_t k) {
        std::string s = "F";
        for (int bit = 3; bit >= 0; --bit) s += ((k >> bit) & 1U) ? '1' : '0';
        return s;
    }
};

// The components that vanish by operator parity in both solvers.
inline constexpr std::array<std::size_t, 4> kOddParityComponents = {
    FidelityComponents::index(0, 1, 0, 0), FidelityComponents::index(0, 0, 1, 0),
    FidelityComponents::index(1, 1, 1, 0), FidelityComponents::index(0, 1, 1, 1)};

struct QubitAmplitudes {
    cplx amp0{1.0, 0.0};
    cplx amp1{0.0, 0.0};

    void validate() const {
        const double norm = std::norm(amp0) + std::norm(amp1);
        if (std::abs(norm - 1.0) > 1e-12)
            throw DomainError("amplitudes: |amp0|^2 + |amp1|^2 = " + std::to_string(norm) + ", expected 1");
    }
};

inline constexpr double kImaginaryResidueTolerance = 1e-10;

// Weighted sum over all sixteen components. `target_phase` multiplies the target |1_N>
// amplitude (1 for the raw fidelity).
inline double weighted_fidelity(const FidelityComponents& f, const QubitAmplitudes& amps,
                                cplx target_phase = {1.0, 0.0}) {
    amps.validate();
    const std::array<cplx, 2> src = {amps.amp0, amps.amp1};
    const std::array<cplx, 2> dst = {amps.amp0, amps.amp1 * target_phase};
    cplx sum{0.0, 0.0};
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            for (int l = 0; l < 2; ++l)
                for (int m = 0; m < 2; ++m)
                    sum += src[i] * std::conj(src[j]) * dst[l] * std::conj(dst[m]) * f.at(i, j, l, m);
    if (std::abs(sum.imag()) > kImaginaryResidueTolerance)
        throw NumericError("fidelity has imaginary residue " + std::to_string(sum.imag()));
    return sum.real();
}

// Phase of the bath-free transfer amplitude P0[N,1](t) = e^{-i e0 t} (-i sin(theta t / 2))^{N-1}.
// Where the sine vanishes its sign is taken as +1.
inline cplx bath_free_transfer_phase(std::size_t n_sites, double theta, double onsite_energy, double t) {
    const cplx minus_i{0.0, -1.0};
    const int power = static_cast<int>(n_sites - 1);
    const double s = std::sin(0.5 * theta * t);
    const double sign = (s < 0.0 && power % 2 == 1) ? -1.0 : 1.0;
    return sign * std::polar(1.0, -onsite_energy * t) * std::pow(minus_i, power);
}

}  // namespace pstbath
