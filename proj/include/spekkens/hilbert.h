// Copyright 2026 The Spekkens-Zd Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


// Dense complex matrices for qudit registers: Weyl operators, phase point
// operators, stabilizer projectors and the Luders rule. Floating point on
// purpose; this is the independent numeric witness for the exact code.

#pragma once

#include <Eigen/Dense>
#include <cmath>
#include <complex>
#include <numbers>
#include <vector>

#include "spekkens/stabilizer.h"

namespace spekkens {

using Complex = std::complex<double>;
using DenseOperator = Eigen::MatrixXcd;

/// Registers of this Hilbert dimension or more are refused (d=9, n=3 is out).
inline constexpr Int kHilbertDimLimit = 729;
inline constexpr double kOracleTolerance = 1e-9;
inline constexpr double kZeroProbability = 1e-12;

inline void check_hilbert_size(const PhaseSpace &space) {
    require_odd(space.d());
    if (space.hilbert_dim() >= kHilbertDimLimit) {
        fail(ErrorCode::TooLarge, "Hilbert dimension " + std::to_string(space.hilbert_dim()) + " is not below " +
                                      std::to_string(kHilbertDimLimit));
    }
}

/// chi(t) = exp(2 pi i t / d).
inline Complex chi(Int t, Int d) {
    double angle = 2.0 * std::numbers::pi * static_cast<double>(reduce_mod(t, d)) / static_cast<double>(d);
    return std::polar(1.0, angle);
}

/// S(q) = sum_x |x - q><x|.
inline DenseOperator shift_matrix(Int q, Int d) {
    DenseOperator s = DenseOperator::Zero(d, d);
    for (Int x = 0; x < d; x++) {
        s(reduce_mod(x - q, d), x) = 1.0;
    }
    return s;
}

/// B(p) = sum_x chi(p x) |x><x|.
inline DenseOperator boost_matrix(Int p, Int d) {
    DenseOperator b = DenseOperator::Zero(d, d);
    for (Int x = 0; x < d; x++) {
        b(x, x) = chi(p * x, d);
    }
    return b;
}

/// Kronecker product with the first factor on the lowest digit of the basis
/// index, so |x_0, x_1, ...> sits at x_0 + d x_1 + ...
inline DenseOperator kron_low_first(const DenseOperator &low, const DenseOperator &high) {
    DenseOperator out(low.rows() * high.rows(), low.cols() * high.cols());
    for (Eigen::Index i = 0; i < high.rows(); i++) {
        for (Eigen::Index j = 0; j < high.cols(); j++) {
            out.block(i * low.rows(), j * low.cols(), low.rows(), low.cols()) = high(i, j) * low;
        }
    }
    return out;
}

inline DenseOperator weyl_matrix(const PhaseSpace &space, const WeylLabel &label,
                                 ChiConvention conv = ChiConvention::Symmetric) {
    check_hilbert_size(space);
    space.check(label.a);
    Int d = space.d();
    Int k = kappa(conv, d);
    DenseOperator out = DenseOperator::Identity(1, 1);
    for (std::size_t m = 0; m < space.n(); m++) {
        Int q = label.a[2 * m], p = label.a[2 * m + 1];
        DenseOperator local = chi(k * q * p, d) * shift_matrix(q, d) * boost_matrix(p, d);
        out = kron_low_first(out, local);
    }
    return chi(label.phase.value(), d) * out;
}

/// A(lambda) = d^-n sum_mu chi(<mu, lambda>) W(mu). With S(q) moving |x> to
/// |x - q>, this is the orientation that puts |x><x| at the column x.
inline DenseOperator phase_point_operator(const PhaseSpace &space, const ModVector &lambda,
                                          ChiConvention conv = ChiConvention::Symmetric) {
    check_hilbert_size(space);
    space.check(lambda);
    Int dim = space.hilbert_dim();
    DenseOperator out = DenseOperator::Zero(dim, dim);
    for (const auto &mu : space.points()) {
        out += chi(symplectic_form(mu, lambda), space.d()) * weyl_matrix(space, WeylLabel(mu, 0), conv);
    }
    return out / static_cast<double>(dim);
}

/// prod_j (1/d) sum_i g_j^i: the projector onto the joint fixed space.
inline DenseOperator projector_of_group(const StabilizerGroup &g, ChiConvention conv = ChiConvention::Symmetric) {
    const PhaseSpace &space = g.space();
    check_hilbert_size(space);
    Int dim = space.hilbert_dim();
    DenseOperator out = DenseOperator::Identity(dim, dim);
    for (const auto &gen : g.generators()) {
        DenseOperator w = weyl_matrix(space, gen, conv);
        DenseOperator power = DenseOperator::Identity(dim, dim);
        DenseOperator avg = DenseOperator::Zero(dim, dim);
        for (Int i = 0; i < space.d(); i++) {
            avg += power;
            power = power * w;
        }
        out = out * (avg / static_cast<double>(space.d()));
    }
    return out;
}

/// rho = P / Tr P.
inline DenseOperator density_of_group(const StabilizerGroup &g, ChiConvention conv = ChiConvention::Symmetric) {
    DenseOperator p = projector_of_group(g, conv);
    double tr = p.trace().real();
    if (tr < 0.5) {
        fail(ErrorCode::Inconsistent, "group " + g.str() + " fixes no state");
    }
    return p / tr;
}

struct LudersResult {
    DenseOperator posterior;
    double probability;
};

inline LudersResult luders(const DenseOperator &rho, const DenseOperator &proj) {
    if ((proj * proj - proj).norm() > kOracleTolerance || (proj - proj.adjoint()).norm() > kOracleTolerance) {
        fail(ErrorCode::InvalidOutcome, "operator is not an orthogonal projector");
    }
    double prob = (proj * rho).trace().real();
    if (prob <= kZeroProbability) {
        fail(ErrorCode::ImpossibleOutcome, "Luders probability is zero");
    }
    return {proj * rho * proj / prob, prob};
}

/// Tr[W(mu) rho] for every mu, in PhaseSpace::index order.
inline std::vector<Complex> weyl_characteristic(const PhaseSpace &space, const DenseOperator &rho,
                                                ChiConvention conv = ChiConvention::Symmetric) {
    std::vector<Complex> out;
    for (const auto &mu : space.points()) {
        DenseOperator w = weyl_matrix(space, WeylLabel(mu, 0), conv);
        out.push_back((w.array() * rho.transpose().array()).sum());
    }
    return out;
}

/// W(lambda) = d^-n Tr[A(lambda) rho], so that the values sum to one.
inline std::vector<Complex> wigner_of_density(const PhaseSpace &space, const DenseOperator &rho,
                                              ChiConvention conv = ChiConvention::Symmetric) {
    check_hilbert_size(space);
    auto c = weyl_characteristic(space, rho, conv);
    auto points = space.points();
    double scale = static_cast<double>(space.num_points());
    std::vector<Complex> out;
    for (const auto &lambda : points) {
        Complex acc = 0.0;
        for (std::size_t k = 0; k < points.size(); k++) {
            acc += chi(symplectic_form(points[k], lambda), space.d()) * c[k];
        }
        out.push_back(acc / scale);
    }
    return out;
}

}  // namespace spekkens
