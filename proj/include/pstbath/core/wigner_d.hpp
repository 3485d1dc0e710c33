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

// wigner_d.hpp — Wigner d-matrix d^J(±pi/2) for spin J = (N-1)/2 in the site basis.
//
// Rows and columns are 1-based site indices j, l with |j> = |J, j - 1 - J>.
// Entry (j, l) of d(pi/2) is
//
//   2^{(1-N)/2} sqrt((l-1)! (N-l)! (j-1)! (N-j)!)
//     * sum_nu (-1)^{j-l+nu} / [(N-j-nu)! (l-1-nu)! (nu+j-l)! nu!]
//
// with nu over every integer that keeps all four factorial arguments >= 0.
// d(-pi/2) is the transpose. Column l of d(pi/2) is the l-th normal mode of the
// chain Hamiltonian (energies increasing with l).

#pragma once

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstddef>
#include <limits>
#include <string>

#include "pstbath/errors.hpp"

namespace pstbath {

enum class RotationAngle { plus_half_pi, minus_half_pi };

struct WignerD {
    Eigen::MatrixXd matrix;
    RotationAngle angle{RotationAngle::plus_half_pi};

    std::size_t size() const noexcept { return static_cast<std::size_t>(matrix.rows()); }
    // 1-based access, matching the site labels.
    double operator()(std::size_t j, std::size_t l) const {
        return matrix(static_cast<Eigen::Index>(j - 1), static_cast<Eigen::Index>(l - 1));
    }
};

namespace detail {

// Largest tolerated absolute error estimate for a single entry.
inline constexpr long double kWignerAbsTolerance = 1e-9L;

inline long double log_factorial(std::size_t k) { return std::lgamma(static_cast<long double>(k) + 1.0L); }

// One entry of d(pi/2). Throws PrecisionError when cancellation in the alternating sum
// could leave an absolute error above kWignerAbsTolerance.
inline double wigner_d_half_pi_entry(std::size_t n, std::size_t j, std::size_t l) {
    const long double log_prefactor =
        0.5L * static_cast<long double>(1.0 - static_cast<double>(n)) * std::log(2.0L) +
        0.5L * (log_factorial(l - 1) + log_factorial(n - l) + log_factorial(j - 1) + log_factorial(n - j));

    // nu ranges over max(0, l - j) .. min(n - j, l - 1).
    const std::size_t nu_lo = l > j ? l - j : 0;
    const std::size_t nu_hi = std::min(n - j, l - 1);

    long double sum = 0.0L;
    long double magnitude = 0.0L;
    for (std::size_t nu = nu_lo; nu <= nu_hi && nu_lo <= nu_hi; ++nu) {
        const long double log_term = log_prefactor - log_factorial(n - j - nu) - log_factorial(l - 1 - nu) -
                                     log_factorial(nu + j - l) - log_factorial(nu);
        const long double term = std::exp(log_term);
        // parity of j - l + nu
        const bool negative = ((j + nu + l) % 2) == 1;
        sum += negative ? -term : term;
        magnitude += term;
    }

    const long double error_estimate = magnitude * 4.0L * std::numeric_limits<long double>::epsilon();
    if (!std::isfinite(static_cast<double>(magnitude)) || error_estimate > kWignerAbsTolerance) {
        char buf[160];
        std::snprintf(buf, sizeof buf, "wigner_d: N = %zu entry (%zu, %zu) loses precision (estimated error %.3g > %.0e)",
                      static_cast<std::size_t>(n), static_cast<std::size_t>(j), static_cast<std::size_t>(l),
                      static_cast<double>(error_estimate), static_cast<double>(kWignerAbsTolerance));
        throw PrecisionError(buf);
    }
    return static_cast<double>(sum);
}

}  // namespace detail

inline WignerD wigner_d(std::size_t n_sites, RotationAngle angle = RotationAngle::plus_half_pi) {
    if (n_sites < 1) throw DomainError("wigner_d: N must be >= 1");
    const auto n = static_cast<Eigen::Index>(n_sites);
    Eigen::MatrixXd d(n, n);
    for (std::size_t j = 1; j <= n_sites; ++j)
        for (std::size_t l = 1; l <= n_sites; ++l)
            d(static_cast<Eigen::Index>(j - 1), static_cast<Eigen::Index>(l - 1)) =
                detail::wigner_d_half_pi_entry(n_sites, j, l);
    if (angle == RotationAngle::minus_half_pi) d.transposeInPlace();
    return WignerD{std::move(d), angle};
}

}  // namespace pstbath
