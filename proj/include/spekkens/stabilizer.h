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


// Qudit stabilizer groups as lists of phased Weyl labels, for odd d.
//
// The label a = (q_0, p_0, ...) names W(a) = chi(kappa q.p) S(q) B(p) with
// S(q)|x> = |x - q>, B(p)|x> = chi(p x)|x> and chi(t) = exp(2 pi i t / d).
// A WeylLabel {a, s} is the operator chi(s) W(a).

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "spekkens/epistemic.h"
#include "spekkens/measurement.h"

namespace spekkens {

/// kappa in the Weyl prefactor chi(kappa q p).
enum class ChiConvention {
    // kappa = -1/2: W(a) W(b) = chi(<a,b>/2) W(a + b), W(a)^k = W(k a).
    Symmetric,
    // kappa = 1, the prefactor chi(pq) taken literally.
    Printed,
};

inline void require_odd(Int d) {
    if (d % 2 == 0) {
        fail(ErrorCode::EvenDimension, "stabilizer phases need odd d, got " + std::to_string(d));
    }
}

inline Int kappa(ChiConvention conv, Int d) {
    require_odd(d);
    return conv == ChiConvention::Symmetric ? reduce_mod(-*inverse_mod(2, d), d) : 1;
}

struct WeylLabel {
    ModVector a;
    Residue phase;

    WeylLabel(ModVector label, Int phase_exp) : a(std::move(label)), phase(phase_exp, a.modulus()) {
    }

    Int d() const {
        return a.modulus();
    }
    std::string str() const {
        return "w^" + std::to_string(phase.value()) + " W" + a.str();
    }
    friend bool operator==(const WeylLabel &, const WeylLabel &) = default;
};

/// Exponent beta with W(a) W(b) = chi(beta) W(a + b).
inline Int weyl_cocycle(const ModVector &a, const ModVector &b, ChiConvention conv = ChiConvention::Symmetric) {
    a.check_compatible(b);
    Int d = a.modulus();
    Int k = kappa(conv, d);
    Int out = 0;
    for (std::size_t m = 0; m + 1 < a.size(); m += 2) {
        Int q = a[m], p = a[m + 1], q2 = b[m], p2 = b[m + 1];
        out += -p * q2 - k * (reduce_mod(p * q2, d) + reduce_mod(p2 * q, d));
        out = reduce_mod(out, d);
    }
    return out;
}

inline WeylLabel weyl_mul(const WeylLabel &u, const WeylLabel &v, ChiConvention conv = ChiConvention::Symmetric) {
    return {u.a + v.a, u.phase.value() + v.phase.value() + weyl_cocycle(u.a, v.a, conv)};
}

/// chi(-s) W(-a), the inverse under the symmetric convention.
inline WeylLabel weyl_inverse(const WeylLabel &u) {
    require_odd(u.d());
    return {-u.a, -u.phase.value()};
}

/// A set of commuting phased Weyl operators <g_1, ..., g_N>.
class StabilizerGroup {
   public:
    StabilizerGroup(PhaseSpace space, std::vector<WeylLabel> generators)
        : space_(space), generators_(std::move(generators)) {
        require_odd(space.d());
        for (const auto &g : generators_) {
            space_.check(g.a);
        }
    }

    const PhaseSpace &space() const {
        return space_;
    }
    const std::vector<WeylLabel> &generators() const {
        return generators_;
    }

    /// M, the span of the labels.
    Submodule labels() const {
        std::vector<ModVector> rows;
        for (const auto &g : generators_) {
            rows.push_back(g.a);
        }
        return howell_form(space_.d(), space_.dim(), rows);
    }

    /// y with a_j . y = s_j for every generator; the group element with
    /// label a then has phase a . y. nullopt when some product of generators
    /// is a nontrivial multiple of the identity.
    std::optional<ModVector> phase_functional() const {
        std::vector<ModVector> rows;
        std::vector<Int> rhs;
        for (const auto &g : generators_) {
            rows.push_back(g.a);
            rhs.push_back(g.phase.value());
        }
        auto sol = solve_linear(space_.d(), space_.dim(), rows, ModVector(space_.d(), rhs));
        if (!sol) {
            return std::nullopt;
        }
        return sol->particular;
    }

    bool contains(const WeylLabel &g) const {
        auto y = phase_functional();
        return y && labels().contains(g.a) && g.a.dot(*y) == g.phase.value();
    }

    std::size_t size() const {
        return static_cast<std::size_t>(labels().size());
    }

    std::string str() const {
        std::string out = "<";
        for (std::size_t k = 0; k < generators_.size(); k++) {
            out += (k ? ", " : "") + generators_[k].str();
        }
        return out + ">";
    }

    /// Same group: same labels with the same phases.
    friend bool operator==(const StabilizerGroup &a, const StabilizerGroup &b) {
        if (a.space_ != b.space_ || a.labels() != b.labels()) {
            return false;
        }
        auto ya = a.phase_functional(), yb = b.phase_functional();
        if (!ya || !yb) {
            return !ya && !yb && a.generators_ == b.generators_;
        }
        Submodule m = a.labels();
        for (const auto &row : m.rows()) {
            if (row.dot(*ya) != row.dot(*yb)) {
                return false;
            }
        }
        return true;
    }

   private:
    PhaseSpace space_;
    std::vector<WeylLabel> generators_;
};

/// Howell rows of M, dropping each row that the later and kept rows already
/// generate. Over Z_d with zero divisors the Howell form can carry such rows.
inline std::vector<ModVector> irredundant_rows(const Submodule &m) {
    std::vector<ModVector> rows = m.rows();
    for (std::size_t i = rows.size(); i-- > 0;) {
        std::vector<ModVector> rest(rows.begin(), rows.end());
        rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(i));
        if (howell_form(m.modulus(), m.ambient(), rest).contains(rows[i])) {
            rows = std::move(rest);
        }
    }
    return rows;
}

/// Irredundant rows of M with their phases.
inline StabilizerGroup canonical_group(const PhaseSpace &space, const Submodule &labels, const ModVector &phases) {
    std::vector<WeylLabel> gens;
    for (const auto &row : irredundant_rows(labels)) {
        gens.emplace_back(row, row.dot(phases));
    }
    return {space, std::move(gens)};
}

/// First violated group invariant, or nullopt.
inline std::optional<std::string> validate(const StabilizerGroup &g) {
    const auto &gens = g.generators();
    for (std::size_t i = 0; i < gens.size(); i++) {
        for (std::size_t j = i + 1; j < gens.size(); j++) {
            if (Int s = symplectic_form(gens[i].a, gens[j].a); s != 0) {
                return "generators " + gens[i].str() + " and " + gens[j].str() + " do not commute (" +
                       std::to_string(s) + ")";
            }
        }
    }
    for (std::size_t i = 0; i < gens.size(); i++) {
        std::vector<ModVector> rest;
        for (std::size_t j = 0; j < gens.size(); j++) {
            if (j != i) {
                rest.push_back(gens[j].a);
            }
        }
        if (howell_form(g.space().d(), g.space().dim(), rest).contains(gens[i].a)) {
            return "generator " + gens[i].str() + " is generated by the others";
        }
    }
    if (!g.phase_functional()) {
        return std::string("a product of generators is a nontrivial phase times the identity");
    }
    return std::nullopt;
}

/// One generator per irredundant row Sigma_j of V:
/// g_j = chi(-sigma_j) W(J^-1 Sigma_j): W(J^-1 Sigma) acts as chi(Sigma . w) on
/// the state, so g_j fixes it.
template <typename Role>
StabilizerGroup from_epistemic(const KnowledgeCoset<Role> &s) {
    require_odd(s.space().d());
    std::vector<WeylLabel> gens;
    for (const auto &row : irredundant_rows(s.known())) {
        gens.emplace_back(apply_symplectic_inverse(row), -row.dot(s.shift()));
    }
    return {s.space(), std::move(gens)};
}

/// Inverse of from_epistemic.
inline EpistemicState to_epistemic(const StabilizerGroup &g) {
    auto y = g.phase_functional();
    if (!y) {
        fail(ErrorCode::Inconsistent, "group " + g.str() + " contains a nontrivial multiple of the identity");
    }
    std::vector<Observable> sigmas;
    std::vector<Int> values;
    for (const auto &gen : g.generators()) {
        sigmas.emplace_back(apply_symplectic(gen.a));
        values.push_back(-gen.phase.value());
    }
    return EpistemicState::from_outcomes(g.space(), sigmas, values);
}

/// Keeps the part of the state group that commutes with the measurement
/// group, then adds the measurement generators.
inline StabilizerGroup stabilizer_update(const StabilizerGroup &state, const StabilizerGroup &meas) {
    if (state.space() != meas.space()) {
        fail(ErrorCode::DimensionMismatch, "state and measurement groups live on different spaces");
    }
    if (auto bad = validate(meas)) {
        // Redundant measurement generators are harmless; the rest is not.
        if (!is_isotropic(meas.labels()) || !meas.phase_functional()) {
            fail(ErrorCode::NotCommuting, *bad);
        }
    }
    auto y = state.phase_functional();
    if (!y) {
        fail(ErrorCode::Inconsistent, "state group " + state.str() + " is inconsistent");
    }
    Submodule kept = intersect(state.labels(), complement(meas.labels(), Pairing::symplectic));
    std::vector<WeylLabel> gens;
    for (const auto &row : kept.rows()) {
        gens.emplace_back(row, row.dot(*y));
    }
    for (const auto &g : meas.generators()) {
        gens.push_back(g);
    }
    StabilizerGroup joined(state.space(), gens);
    auto y2 = joined.phase_functional();
    if (!y2) {
        fail(ErrorCode::Inconsistent, "outcome has probability zero: " + joined.str() + " is inconsistent");
    }
    return canonical_group(state.space(), joined.labels(), *y2);
}

/// Maximal isotropic label sets with every phase assignment.
inline std::vector<StabilizerGroup> enumerate_stabilizer_states(Int d, std::size_t n,
                                                                std::size_t guard = kDefaultEnumerationGuard) {
    require_odd(d);
    std::vector<StabilizerGroup> out;
    for (const auto &s : enumerate_pure_states(PhaseSpace(d, n), guard)) {
        out.push_back(from_epistemic(s));
    }
    return out;
}

}  // namespace spekkens
