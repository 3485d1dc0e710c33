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

// wick.hpp — expectation values of products of linear fermion operators in a
// particle-number-conserving Gaussian state with diagonal occupations nu_k.
//
// A LinearOperator is either sum_k c_k f_k^dag (creation) or sum_k c_k f_k (annihilation).
// Two-point contractions:
//   <A^dag B> = sum_k a_k b_k nu_k        <B A^dag> = sum_k b_k a_k (1 - nu_k)
// and pairs of the same kind vanish.

#pragma once

#include <Eigen/Dense>

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

#include "pstbath/errors.hpp"

namespace pstbath {

struct LinearOperator {
    bool creation{false};
    Eigen::VectorXcd coeff;

    static LinearOperator create(Eigen::VectorXcd c) { return {true, std::move(c)}; }
    static LinearOperator annihilate(Eigen::VectorXcd c) { return {false, std::move(c)}; }
    static LinearOperator site_create(Eigen::Index dim, Eigen::Index k) {
        Eigen::VectorXcd c = Eigen::VectorXcd::Zero(dim);
        c(k) = 1.0;
        return create(std::move(c));
    }
    static LinearOperator site_annihilate(Eigen::Index dim, Eigen::Index k) {
        Eigen::VectorXcd c = Eigen::VectorXcd::Zero(dim);
        c(k) = 1.0;
        return annihilate(std::move(c));
    }
};

class GaussianState {
  public:
    explicit GaussianState(Eigen::VectorXd occupations) : nu_(std::move(occupations)) {}

    std::complex<double> contract(const LinearOperator& left, const LinearOperator& right) const {
        if (left.creation == right.creation) return {0.0, 0.0};
        if (left.coeff.size() != nu_.size() || right.coeff.size() != nu_.size())
            throw ShapeError("wick: operator dimension does not match the state");
        const auto weight = left.creation ? Eigen::ArrayXd(nu_.array()) : Eigen::ArrayXd(1.0 - nu_.array());
        return (left.coeff.array() * right.coeff.array() * weight.cast<std::complex<double>>()).sum();
    }

    // <X_1 X_2 ... X_n>; odd n gives exactly zero.
    std::complex<double> expectation(std::span<const LinearOperator> ops) const {
        if (ops.empty()) return {1.0, 0.0};
        if (ops.size() % 2 == 1) return {0.0, 0.0};
        // Expand along the first operator: sum_k (-1)^{k-1} <X_1 X_k> <rest>.
        std::complex<double> total{0.0, 0.0};
        std::vector<LinearOperator> rest;
        rest.reserve(ops.size() - 2);
        for (std::size_t k = 1; k < ops.size(); ++k) {
            const auto pair = contract(ops[0], ops[k]);
            if (pair == std::complex<double>(0.0, 0.0)) continue;
            rest.clear();
            for (std::size_t r = 1; r < ops.size(); ++r)
                if (r != k) rest.push_back(ops[r]);
            const double sign = (k % 2 == 1) ? 1.0 : -1.0;
            total += sign * pair * expectation(rest);
        }
        return total;
    }

    const Eigen::VectorXd& occupations() const noexcept { return nu_; }

  private:
    Eigen::VectorXd nu_;
};

}  // namespace pstbath
