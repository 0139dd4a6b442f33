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


// Epistemic states (V, w) and sharp measurement elements (V_pi, r). Both are
// the same object: a known-variable submodule plus a representative point,
// with support perp(V) + w.

#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "spekkens/phase_space.h"

namespace spekkens {

struct StateRole {
    static constexpr const char *noun = "state";
    static constexpr ErrorCode inconsistent = ErrorCode::InvalidState;
    static constexpr ErrorCode non_isotropic = ErrorCode::InvalidState;
};

struct MeasurementRole {
    static constexpr const char *noun = "measurement";
    static constexpr ErrorCode inconsistent = ErrorCode::InvalidOutcome;
    static constexpr ErrorCode non_isotropic = ErrorCode::NotCommuting;
};

struct KnownOutcome {
    ModVector generator;
    Int value;

    friend bool operator==(const KnownOutcome &, const KnownOutcome &) = default;
};

template <typename Role>
class KnowledgeCoset {
   public:
    /// Raw constructor. Stores the parts as given; use validate() or one of
    /// the factories to get a checked, canonical value.
    KnowledgeCoset(PhaseSpace space, Submodule known, ModVector shift, std::vector<KnownOutcome> outcomes)
        : space_(space),
          known_(std::move(known)),
          shift_(std::move(shift)),
          outcomes_(std::move(outcomes)),
          perp_(complement(known_, Pairing::euclidean)) {
        space_.check(known_);
        space_.check(shift_);
    }

    /// Knows Sigma_j^T w = values[j] for each generator.
    static KnowledgeCoset from_outcomes(PhaseSpace space, const std::vector<Observable> &generators,
                                        const std::vector<Int> &values) {
        if (generators.size() != values.size()) {
            fail(ErrorCode::DimensionMismatch, std::to_string(generators.size()) + " generators but " +
                                                   std::to_string(values.size()) + " values");
        }
        std::vector<ModVector> rows;
        std::vector<KnownOutcome> outcomes;
        for (std::size_t k = 0; k < generators.size(); k++) {
            space.check(generators[k].sigma());
            rows.push_back(generators[k].sigma());
            outcomes.push_back({generators[k].sigma(), reduce_mod(values[k], space.d())});
        }
        for (std::size_t i = 0; i < rows.size(); i++) {
            for (std::size_t j = i + 1; j < rows.size(); j++) {
                if (Int s = symplectic_form(rows[i], rows[j]); s != 0) {
                    fail(Role::non_isotropic, std::string(Role::noun) + " generators " + rows[i].str() + " and " +
                                                  rows[j].str() + " have symplectic product " + std::to_string(s));
                }
            }
        }
        std::vector<Int> rhs;
        for (const auto &o : outcomes) {
            rhs.push_back(o.value);
        }
        auto sol = solve_linear(space.d(), space.dim(), rows, ModVector(space.d(), rhs));
        if (!sol) {
            fail(Role::inconsistent, std::string("no phase-space point has the requested ") + Role::noun + " values");
        }
        Submodule known = howell_form(space.d(), space.dim(), rows);
        return canonical(space, std::move(known), sol->particular, std::move(outcomes));
    }

    /// Builds from V and any point of the support. Outcomes are read off w
    /// on the Howell rows of V.
    static KnowledgeCoset from_parts(PhaseSpace space, const Submodule &known, const ModVector &shift) {
        space.check(known);
        space.check(shift);
        Submodule canon = howell_form(space.d(), space.dim(), known.rows());
        if (!is_isotropic(canon)) {
            fail(Role::non_isotropic, canon.str() + " is not isotropic");
        }
        std::vector<KnownOutcome> outcomes;
        for (const auto &row : canon.rows()) {
            outcomes.push_back({row, row.dot(shift)});
        }
        return canonical(space, std::move(canon), shift, std::move(outcomes));
    }

    static KnowledgeCoset nothing_known(PhaseSpace space) {
        return KnowledgeCoset(space, space.nothing(), space.zero(), {});
    }

    const PhaseSpace &space() const {
        return space_;
    }
    /// V (or V_pi): the known variables.
    const Submodule &known() const {
        return known_;
    }
    /// w (or r): canonical representative point.
    const ModVector &shift() const {
        return shift_;
    }
    /// perp(V): the support is perp() + shift().
    const Submodule &perp() const {
        return perp_;
    }
    const std::vector<KnownOutcome> &outcomes() const {
        return outcomes_;
    }

    /// Same known variables, different representative point.
    KnowledgeCoset with_shift(const ModVector &shift) const {
        return from_parts(space_, known_, shift);
    }

    bool contains(const ModVector &lambda) const {
        return perp_.contains(lambda - shift_);
    }

    /// States are equal when they have the same support.
    friend bool operator==(const KnowledgeCoset &a, const KnowledgeCoset &b) {
        return a.space_ == b.space_ && a.known_ == b.known_ && a.perp_.reduce(a.shift_) == b.perp_.reduce(b.shift_);
    }

    std::string str() const {
        return "V=" + known_.str() + " w=" + shift_.str();
    }

   private:
    static KnowledgeCoset canonical(PhaseSpace space, Submodule known, const ModVector &shift,
                                    std::vector<KnownOutcome> outcomes) {
        KnowledgeCoset out(space, std::move(known), shift, std::move(outcomes));
        out.shift_ = out.perp_.reduce(shift);
        return out;
    }

    PhaseSpace space_;
    Submodule known_;
    ModVector shift_;
    std::vector<KnownOutcome> outcomes_;
    Submodule perp_;
};

using EpistemicState = KnowledgeCoset<StateRole>;
using SharpMeasurement = KnowledgeCoset<MeasurementRole>;

/// First violated invariant, or nullopt when the value is a valid canonical
/// state. Never throws for shape-consistent input.
template <typename Role>
std::optional<std::string> validate(const KnowledgeCoset<Role> &s) {
    const Submodule &v = s.known();
    if (howell_form(v.modulus(), v.ambient(), v.rows()) != v) {
        return "V is not in canonical form";
    }
    const auto &rows = v.rows();
    for (std::size_t i = 0; i < rows.size(); i++) {
        for (std::size_t j = i + 1; j < rows.size(); j++) {
            if (Int p = symplectic_form(rows[i], rows[j]); p != 0) {
                return "V is not isotropic: <" + rows[i].str() + "," + rows[j].str() + "> = " + std::to_string(p) +
                       ", expected 0";
            }
        }
    }
    for (const auto &o : s.outcomes()) {
        if (o.generator.modulus() != v.modulus() || o.generator.size() != v.ambient()) {
            return "known outcome generator " + o.generator.str() + " has the wrong shape";
        }
        if (!v.contains(o.generator)) {
            return "known outcome generator " + o.generator.str() + " is not in V";
        }
        if (Int got = o.generator.dot(s.shift()); got != reduce_mod(o.value, v.modulus())) {
            return "w gives " + o.generator.str() + " the value " + std::to_string(got) + ", recorded " +
                   std::to_string(o.value);
        }
    }
    if (s.perp().reduce(s.shift()) != s.shift()) {
        return "w is not the least point of its coset";
    }
    return std::nullopt;
}

/// The set perp(V) + w, sorted.
template <typename Role>
std::vector<ModVector> ontic_support(const KnowledgeCoset<Role> &s, std::size_t guard = kDefaultEnumerationGuard) {
    std::vector<ModVector> out;
    for (const auto &v : enumerate_elements(s.perp(), guard)) {
        out.push_back(v + s.shift());
    }
    std::sort(out.begin(), out.end());
    return out;
}

/// Uniform 1/|perp(V)| on the support.
inline EpistemicDistribution distribution(const EpistemicState &s) {
    EpistemicDistribution out(s.space());
    Rational weight(1, s.perp().size());
    for (const auto &v : ontic_support(s)) {
        out.set(v, weight);
    }
    return out;
}

/// Sigma^T w when Sigma is a known variable.
template <typename Role>
std::optional<Residue> known_value(const KnowledgeCoset<Role> &s, const Observable &obs) {
    s.space().check(obs.sigma());
    if (!s.known().contains(obs.sigma())) {
        return std::nullopt;
    }
    return evaluate(obs, s.shift());
}

/// Every isotropic submodule of the phase space, in Howell order.
inline std::vector<Submodule> enumerate_isotropic_submodules(const PhaseSpace &space,
                                                             std::size_t guard = kDefaultEnumerationGuard) {
    std::set<std::vector<ModVector>> seen;
    std::vector<Submodule> found{space.nothing()};
    seen.insert({});
    for (std::size_t head = 0; head < found.size(); head++) {
        Submodule current = found[head];
        Submodule room = complement(current, Pairing::symplectic);
        for (const auto &v : enumerate_elements(room, guard)) {
            if (current.contains(v)) {
                continue;
            }
            Submodule bigger = direct_sum(current, howell_form(space.d(), space.dim(), std::vector<ModVector>{v}));
            if (seen.insert(bigger.rows()).second) {
                if (found.size() >= guard) {
                    fail(ErrorCode::TooLarge, "too many isotropic submodules");
                }
                found.push_back(std::move(bigger));
            }
        }
    }
    std::sort(found.begin(), found.end(),
              [](const Submodule &a, const Submodule &b) { return a.rows() < b.rows(); });
    return found;
}

/// Maximal isotropic V (V equal to its symplectic complement) with every
/// shift: the states of maximal knowledge.
inline std::vector<EpistemicState> enumerate_pure_states(const PhaseSpace &space,
                                                         std::size_t guard = kDefaultEnumerationGuard) {
    if (space.num_points() > static_cast<Int>(guard)) {
        fail(ErrorCode::TooLarge, "phase space has " + std::to_string(space.num_points()) + " points");
    }
    std::vector<EpistemicState> out;
    for (const auto &v : enumerate_isotropic_submodules(space, guard)) {
        if (complement(v, Pairing::symplectic) != v) {
            continue;
        }
        Submodule perp = complement(v, Pairing::euclidean);
        for (const auto &w : coset_representatives(space.whole(), perp, guard)) {
            out.push_back(EpistemicState::from_parts(space, v, w));
        }
    }
    return out;
}

}  // namespace spekkens
