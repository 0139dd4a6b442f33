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


// Posterior states after a sharp measurement outcome.
//
// With V_commute = {v in V : <v, u> = 0 for all u in V_pi}, every rule below
// produces the state whose support is
//
//     (perp(V_commute) + w) ∩ (perp(V_pi) + r),
//
// that is V' = V_commute + V_pi. Fine elements go through the gamma-vector
// shift rule; coarse elements go through the union of their fine branches.

#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "spekkens/epistemic.h"
#include "spekkens/graining.h"

namespace spekkens {

struct CommutingSplit {
    /// Elements of V that commute with every measurement generator.
    Submodule commute;
    /// Span of coset_reps: perp(V_commute) = perp(V) + V_other.
    Submodule other;
    /// Least representatives of perp(V_commute) modulo perp(V), sorted.
    std::vector<ModVector> coset_reps;
};

inline void check_same_space(const EpistemicState &state, const SharpMeasurement &element) {
    if (state.space() != element.space()) {
        fail(state.space().d() != element.space().d() ? ErrorCode::MixedModulus : ErrorCode::DimensionMismatch,
             "state and measurement live on different phase spaces");
    }
}

inline Submodule commuting_part(const Submodule &v, const Submodule &v_pi) {
    return intersect(v, complement(v_pi, Pairing::symplectic));
}

inline CommutingSplit split_commuting(const EpistemicState &state, const SharpMeasurement &element) {
    check_same_space(state, element);
    Submodule commute = commuting_part(state.known(), element.known());
    auto reps = coset_representatives(complement(commute, Pairing::euclidean), state.perp());
    Submodule other = howell_form(state.space().d(), state.space().dim(), reps);
    return {std::move(commute), std::move(other), std::move(reps)};
}

/// Generators exactly as supplied to the measurement, or its Howell rows.
inline std::vector<Observable> measurement_generators(const SharpMeasurement &element) {
    std::vector<Observable> out;
    for (const auto &o : element.outcomes()) {
        out.emplace_back(o.generator);
    }
    return out;
}

inline bool has_coarse_generator(const SharpMeasurement &element) {
    for (const auto &o : element.outcomes()) {
        if (!o.generator.is_zero() && classify(Observable(o.generator)).kind == Graining::Coarse) {
            return true;
        }
    }
    return false;
}

/// One element per attainable joint outcome of the generators, ordered by
/// the outcome tuple.
inline std::vector<SharpMeasurement> measurement_elements(const SharpMeasurement &meas) {
    const PhaseSpace &space = meas.space();
    auto gens = measurement_generators(meas);
    std::vector<std::pair<std::vector<Int>, SharpMeasurement>> keyed;
    for (const auto &r : coset_representatives(space.whole(), meas.perp())) {
        std::vector<Int> values;
        for (const auto &g : gens) {
            values.push_back(g.sigma().dot(r));
        }
        keyed.emplace_back(values, SharpMeasurement::from_outcomes(space, gens, values));
    }
    std::sort(keyed.begin(), keyed.end(), [](const auto &a, const auto &b) { return a.first < b.first; });
    std::vector<SharpMeasurement> out;
    for (auto &k : keyed) {
        out.push_back(std::move(k.second));
    }
    return out;
}

namespace detail {

/// delta with rows(fixed) . delta = 0 and rows(target) . delta = rows(target) . (r - w).
inline std::optional<ModVector> joint_shift(const Submodule &fixed, const Submodule &target, const ModVector &w,
                                            const ModVector &r) {
    Int d = w.modulus();
    std::vector<ModVector> eqs;
    std::vector<Int> rhs;
    for (const auto &row : fixed.rows()) {
        eqs.push_back(row);
        rhs.push_back(0);
    }
    for (const auto &row : target.rows()) {
        eqs.push_back(row);
        rhs.push_back(row.dot(r - w));
    }
    if (eqs.empty()) {
        return ModVector(d, w.size());
    }
    auto sol = solve_linear(d, w.size(), eqs, ModVector(d, rhs));
    if (!sol) {
        return std::nullopt;
    }
    return sol->particular;
}

/// gamma_i with Sigma'_i . gamma_i = 1, Sigma'_j . gamma_i = 0 (j != i), and
/// gamma_i orthogonal to V_commute. Nullopt when some gamma_i is missing.
inline std::optional<std::vector<ModVector>> dual_gammas(const Submodule &commute,
                                                         const std::vector<ModVector> &gens) {
    if (gens.empty()) {
        return std::vector<ModVector>{};
    }
    Int d = gens.front().modulus();
    std::size_t m = gens.front().size();
    std::vector<ModVector> out;
    for (std::size_t i = 0; i < gens.size(); i++) {
        std::vector<ModVector> eqs = commute.rows();
        std::vector<Int> rhs(eqs.size(), 0);
        for (std::size_t j = 0; j < gens.size(); j++) {
            eqs.push_back(gens[j]);
            rhs.push_back(i == j ? 1 : 0);
        }
        auto sol = solve_linear(d, m, eqs, ModVector(d, rhs));
        if (!sol) {
            return std::nullopt;
        }
        out.push_back(sol->particular);
    }
    return out;
}

[[noreturn]] inline void impossible(const EpistemicState &state, const SharpMeasurement &element) {
    fail(ErrorCode::ImpossibleOutcome,
         "outcome has probability 0: support of " + state.str() + " misses element " + element.str());
}

inline void require_fine(const SharpMeasurement &element) {
    for (const auto &o : element.outcomes()) {
        if (!o.generator.is_zero() && classify(Observable(o.generator)).kind == Graining::Coarse) {
            fail(ErrorCode::CoarseGenerator, o.generator.str() + " is coarse; use update_coarse");
        }
    }
}

}  // namespace detail

/// Shift-rule posterior w' = w + sum_i Sigma'_i.(r - w) gamma_i over the
/// Howell rows of V_pi, with V' = V_commute + V_pi.
inline EpistemicState update_general(const EpistemicState &state, const SharpMeasurement &element) {
    check_same_space(state, element);
    detail::require_fine(element);
    const PhaseSpace &space = state.space();
    Submodule commute = commuting_part(state.known(), element.known());
    const ModVector &w = state.shift();
    const ModVector &r = element.shift();

    // A dual family of gammas exists whenever the outcome is attainable and
    // V_pi meets V_commute trivially; otherwise solve for the shift directly.
    std::optional<ModVector> delta;
    const auto &gens = element.known().rows();
    if (auto gammas = detail::dual_gammas(commute, gens)) {
        ModVector acc = space.zero();
        for (std::size_t i = 0; i < gens.size(); i++) {
            acc += gens[i].dot(r - w) * (*gammas)[i];
        }
        delta = acc;
    } else {
        delta = detail::joint_shift(commute, element.known(), w, r);
    }
    if (!delta) {
        detail::impossible(state, element);
    }
    return EpistemicState::from_parts(space, direct_sum(commute, element.known()), w + *delta);
}

/// Same as update_general, but insists that the element does not disturb
/// the state.
inline EpistemicState update_commuting(const EpistemicState &state, const SharpMeasurement &element) {
    check_same_space(state, element);
    for (const auto &u : state.known().rows()) {
        for (const auto &v : element.known().rows()) {
            if (Int s = symplectic_form(u, v); s != 0) {
                fail(ErrorCode::NotCommuting, "state generator " + u.str() + " and measurement generator " +
                                                  v.str() + " have symplectic product " + std::to_string(s));
            }
        }
    }
    detail::require_fine(element);
    return update_general(state, element);
}

/// Posterior for an element with coarse generators: the union over all fine
/// branches of (perp(V_commute) + w) ∩ (perp(V_fg) + r_fg), rebuilt as a
/// single coset.
inline EpistemicState update_coarse(const EpistemicState &state, const SharpMeasurement &element,
                                    std::size_t guard = kDefaultEnumerationGuard) {
    check_same_space(state, element);
    const PhaseSpace &space = state.space();
    Int d = space.d();
    Submodule commute = commuting_part(state.known(), element.known());
    Submodule commute_perp = complement(commute, Pairing::euclidean);

    // Each coarse generator contributes its fine branches; fine generators
    // contribute themselves. Branch combinations are an odometer.
    struct Choice {
        ModVector generator;
        std::vector<Int> values;
    };
    std::vector<Choice> choices;
    bool any_coarse = false;
    for (const auto &o : element.outcomes()) {
        if (o.generator.is_zero()) {
            continue;
        }
        Observable g(o.generator);
        if (classify(g).kind == Graining::Coarse) {
            any_coarse = true;
            auto branches = fine_decomposition(g, o.value);
            Choice c{branches.front().sigma_fg.sigma(), {}};
            for (const auto &b : branches) {
                c.values.push_back(b.outcome);
            }
            choices.push_back(std::move(c));
        } else {
            choices.push_back({o.generator, {o.value}});
        }
    }
    if (!any_coarse) {
        fail(ErrorCode::NotCoarse, "element " + element.str() + " has no coarse generator");
    }

    std::vector<ModVector> fine_rows;
    for (const auto &c : choices) {
        fine_rows.push_back(c.generator);
    }
    Submodule fine = howell_form(d, space.dim(), fine_rows);
    Submodule branch_perp = intersect(commute_perp, complement(fine, Pairing::euclidean));
    auto branch_elems = enumerate_elements(branch_perp, guard);

    std::optional<ModVector> first;
    std::vector<ModVector> points;
    std::vector<std::size_t> digit(choices.size(), 0);
    while (true) {
        std::vector<Int> values;
        for (std::size_t k = 0; k < choices.size(); k++) {
            values.push_back(choices[k].values[digit[k]]);
        }
        auto r = solve_linear(d, space.dim(), fine_rows, ModVector(d, values));
        if (r) {
            auto delta = detail::joint_shift(commute, fine, state.shift(), r->particular);
            if (delta) {
                ModVector base = state.shift() + *delta;
                if (!first) {
                    first = base;
                }
                for (const auto &e : branch_elems) {
                    points.push_back(base + e);
                }
                if (points.size() > guard) {
                    fail(ErrorCode::TooLarge, "coarse posterior support exceeds guard");
                }
            }
        }
        std::size_t k = choices.size();
        while (k > 0 && digit[k - 1] + 1 == choices[k - 1].values.size()) {
            digit[k - 1] = 0;
            k--;
        }
        if (k == 0) {
            break;
        }
        digit[k - 1]++;
    }
    if (!first) {
        detail::impossible(state, element);
    }

    std::sort(points.begin(), points.end());
    points.erase(std::unique(points.begin(), points.end()), points.end());
    std::vector<ModVector> diffs;
    for (const auto &p : points) {
        diffs.push_back(p - *first);
    }
    Submodule support_dir = howell_form(d, space.dim(), diffs);
    if (static_cast<std::size_t>(support_dir.size()) != points.size()) {
        fail(ErrorCode::InvalidState, "union of fine branches is not a coset");
    }
    Submodule known = complement(support_dir, Pairing::euclidean);
    if (known != direct_sum(commute, element.known())) {
        fail(ErrorCode::InvalidState, "union of fine branches does not match V_commute + V_pi");
    }
    return EpistemicState::from_parts(space, known, *first);
}

/// Dispatches on the element's generators.
inline EpistemicState update(const EpistemicState &state, const SharpMeasurement &element) {
    if (has_coarse_generator(element)) {
        return update_coarse(state, element);
    }
    return update_general(state, element);
}

/// |support(state) ∩ support(element)| / |support(state)|.
inline Rational outcome_probability(const EpistemicState &state, const SharpMeasurement &element) {
    check_same_space(state, element);
    // Two cosets A + a and B + b meet iff a - b lies in A + B.
    Submodule sum = direct_sum(state.perp(), element.perp());
    if (!sum.contains(element.shift() - state.shift())) {
        return Rational(0);
    }
    Submodule meet = intersect(state.perp(), element.perp());
    return Rational(meet.size(), state.perp().size());
}

inline std::vector<std::pair<SharpMeasurement, Rational>> outcome_probabilities(const EpistemicState &state,
                                                                                const SharpMeasurement &meas) {
    std::vector<std::pair<SharpMeasurement, Rational>> out;
    for (auto &e : measurement_elements(meas)) {
        Rational p = outcome_probability(state, e);
        out.emplace_back(std::move(e), p);
    }
    return out;
}

}  // namespace spekkens
