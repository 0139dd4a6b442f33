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


// Phase space Z_d^{2n}, observables as linear functionals on it, and
// exact-rational functions over phase space.

#pragma once

#include <string>
#include <vector>

#include "spekkens/rational.h"
#include "spekkens/zmod.h"

namespace spekkens {

/// Omega = Z_d^{2n} with coordinates laid out (x_0, p_0, ..., x_{n-1}, p_{n-1}).
class PhaseSpace {
   public:
    PhaseSpace(Int d, std::size_t n) : d_(d), n_(n) {
        if (d < 2) {
            fail(ErrorCode::MixedModulus, "dimension d must be at least 2, got " + std::to_string(d));
        }
        if (n < 1) {
            fail(ErrorCode::DimensionMismatch, "need at least one system");
        }
    }

    Int d() const {
        return d_;
    }
    std::size_t n() const {
        return n_;
    }
    /// Length of phase-space vectors, 2n.
    std::size_t dim() const {
        return 2 * n_;
    }
    /// d^n, the Hilbert-space dimension of the matching qudit register.
    Int hilbert_dim() const {
        Int out = 1;
        for (std::size_t k = 0; k < n_; k++) {
            out *= d_;
        }
        return out;
    }
    Int num_points() const {
        return hilbert_dim() * hilbert_dim();
    }

    ModVector zero() const {
        return ModVector(d_, dim());
    }
    ModVector point(Int index) const {
        return decode(index, d_, dim());
    }
    Int index(const ModVector &v) const {
        check(v);
        return encode(v);
    }
    std::vector<ModVector> points() const {
        std::vector<ModVector> out;
        out.reserve(static_cast<std::size_t>(num_points()));
        for (Int k = 0; k < num_points(); k++) {
            out.push_back(point(k));
        }
        return out;
    }

    Submodule whole() const {
        return Submodule::whole(d_, dim());
    }
    Submodule nothing() const {
        return Submodule(d_, dim());
    }

    void check(const ModVector &v) const {
        if (v.modulus() != d_) {
            fail(ErrorCode::MixedModulus, "vector " + v.str() + " is not over Z_" + std::to_string(d_));
        }
        if (v.size() != dim()) {
            fail(ErrorCode::DimensionMismatch,
                 "vector " + v.str() + " does not have length " + std::to_string(dim()));
        }
    }
    void check(const Submodule &s) const {
        if (s.modulus() != d_) {
            fail(ErrorCode::MixedModulus, "submodule is not over Z_" + std::to_string(d_));
        }
        if (s.ambient() != dim()) {
            fail(ErrorCode::DimensionMismatch, "submodule ambient is not " + std::to_string(dim()));
        }
    }

    friend bool operator==(const PhaseSpace &, const PhaseSpace &) = default;

   private:
    Int d_;
    std::size_t n_;
};

/// A linear functional Sigma = sum_m (a_m X_m + b_m P_m), stored as its
/// coefficient vector (a_0, b_0, ...).
class Observable {
   public:
    explicit Observable(ModVector sigma) : sigma_(std::move(sigma)) {
    }
    Observable(Int d, std::initializer_list<Int> coefficients) : sigma_(d, coefficients) {
    }

    const ModVector &sigma() const {
        return sigma_;
    }
    bool is_zero() const {
        return sigma_.is_zero();
    }

    friend bool operator==(const Observable &, const Observable &) = default;
    friend auto operator<=>(const Observable &, const Observable &) = default;

   private:
    ModVector sigma_;
};

/// Sigma^T lambda mod d.
inline Residue evaluate(const Observable &obs, const ModVector &lambda) {
    return {obs.sigma().dot(lambda), lambda.modulus()};
}

/// a^T J b.
inline Residue symplectic_product(const Observable &a, const Observable &b) {
    return {symplectic_form(a.sigma(), b.sigma()), a.sigma().modulus()};
}

inline bool commutes(const Observable &a, const Observable &b) {
    return symplectic_product(a, b).value() == 0;
}

/// True when every pair of rows has vanishing symplectic form.
inline bool is_isotropic(const Submodule &s) {
    const auto &rows = s.rows();
    for (std::size_t i = 0; i < rows.size(); i++) {
        for (std::size_t j = i + 1; j < rows.size(); j++) {
            if (symplectic_form(rows[i], rows[j]) != 0) {
                return false;
            }
        }
    }
    return true;
}

struct DistributionTag {};
struct WignerTag {};
struct ResponseTag {};

/// An exact-rational function on phase space, indexed by PhaseSpace::index.
/// The tag keeps states, Wigner maps and response functions from mixing.
template <typename Tag>
class PhaseFunction {
   public:
    explicit PhaseFunction(PhaseSpace space)
        : space_(space), values_(static_cast<std::size_t>(space.num_points()), Rational(0)) {
    }

    const PhaseSpace &space() const {
        return space_;
    }
    const std::vector<Rational> &values() const {
        return values_;
    }

    const Rational &operator()(const ModVector &lambda) const {
        return values_[static_cast<std::size_t>(space_.index(lambda))];
    }
    const Rational &at(Int index) const {
        return values_[static_cast<std::size_t>(index)];
    }
    void set(const ModVector &lambda, Rational value) {
        values_[static_cast<std::size_t>(space_.index(lambda))] = value;
    }
    void set_at(Int index, Rational value) {
        values_[static_cast<std::size_t>(index)] = value;
    }

    Rational total() const {
        Rational acc(0);
        for (const auto &v : values_) {
            acc += v;
        }
        return acc;
    }

    /// Points with nonzero value, sorted.
    std::vector<ModVector> support() const {
        std::vector<ModVector> out;
        for (Int k = 0; k < space_.num_points(); k++) {
            if (values_[static_cast<std::size_t>(k)].numerator() != 0) {
                out.push_back(space_.point(k));
            }
        }
        std::sort(out.begin(), out.end());
        return out;
    }

    friend bool operator==(const PhaseFunction &, const PhaseFunction &) = default;

   private:
    PhaseSpace space_;
    std::vector<Rational> values_;
};

using EpistemicDistribution = PhaseFunction<DistributionTag>;
using WignerMap = PhaseFunction<WignerTag>;
using ResponseFunction = PhaseFunction<ResponseTag>;

}  // namespace spekkens
