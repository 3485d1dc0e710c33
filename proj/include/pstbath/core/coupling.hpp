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

// coupling.hpp — chain/bath exchange couplings g_{lx} and their normal-mode transform.
//
// Layout: row = chain site l (1..N), column = bath site x (1..M).

#pragma once

#include <Eigen/Dense>

#include <cmath>
#include <cstddef>
#include <numbers>
#include <string>
#include <variant>

#include "pstbath/core/wigner_d.hpp"
#include "pstbath/errors.hpp"

namespace pstbath {

struct GaussianCoupling {
    double alpha{0.1};  // dimensionless inverse width
};
struct UniformCoupling {
    double g0{0.0};
};
struct ExplicitCoupling {
    Eigen::MatrixXd matrix;
};

using CouplingModel = std::variant<GaussianCoupling, UniformCoupling, ExplicitCoupling>;

// g_{lx} = theta sqrt(alpha) / pi^{1/4} exp(-alpha^2 (l - x - offset)^2 / 2) for the gaussian profile.
inline Eigen::MatrixXd coupling_matrix(const CouplingModel& model, std::size_t n, std::size_t m, double theta = 1.0,
                                       long bath_offset = 0) {
    const auto rows = static_cast<Eigen::Index>(n);
    const auto cols = static_cast<Eigen::Index>(m);
    if (const auto* gauss = std::get_if<GaussianCoupling>(&model)) {
        if (!(gauss->alpha > 0.0)) throw DomainError("gaussian coupling: alpha must be > 0");
        const double amplitude = theta * std::sqrt(gauss->alpha) / std::pow(std::numbers::pi, 0.25);
        const double a2 = gauss->alpha * gauss->alpha;
        Eigen::MatrixXd g(rows, cols);
        for (Eigen::Index l = 0; l < rows; ++l)
            for (Eigen::Index x = 0; x < cols; ++x) {
                const double dist = static_cast<double>(l - x - bath_offset);
                g(l, x) = amplitude * std::exp(-0.5 * a2 * dist * dist);
            }
        return g;
    }
    if (const auto* uni = std::get_if<UniformCoupling>(&model)) return Eigen::MatrixXd::Constant(rows, cols, uni->g0);

    const auto& expl = std::get<ExplicitCoupling>(model).matrix;
    if (expl.rows() != rows || expl.cols() != cols)
        throw ShapeError("explicit coupling is " + std::to_string(expl.rows()) + "x" + std::to_string(expl.cols()) +
                         ", expected " + std::to_string(n) + "x" + std::to_string(m));
    return expl;
}

// g~_{lx} = sum_j g_{jx} d_{jl}(pi/2): couplings of normal mode l to bath site x.
// `d` may be given at either angle; the (pi/2) orientation is used.
inline Eigen::MatrixXd transform_couplings(const Eigen::MatrixXd& g, const WignerD& d) {
    if (static_cast<Eigen::Index>(d.size()) != g.rows())
        throw ShapeError("transform_couplings: d is " + std::to_string(d.size()) + "x" + std::to_string(d.size()) +
                         " but g has " + std::to_string(g.rows()) + " rows");
    if (d.angle == RotationAngle::plus_half_pi) return d.matrix.transpose() * g;
    return d.matrix * g;
}

}  // namespace pstbath
