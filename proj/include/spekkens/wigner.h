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


// Exact Wigner maps of epistemic states, response functions of measurement
// elements, and the Wigner-side update rules. Odd d only.

#pragma once

#include <vector>

#include "spekkens/measurement.h"
#include "spekkens/stabilizer.h"

namespace spekkens {

inline WignerMap wigner_of_epistemic(const EpistemicState &s) {
    require_odd(s.space().d());
    WignerMap out(s.space());
    Rational weight(1, s.perp().size());
    for (const auto &lam : ontic_support(s)) {
        out.set(lam, weight);
    }
    return out;
}

/// Indicator of perp(V_pi) + r.
inline ResponseFunction response_of_element(const SharpMeasurement &element) {
    require_odd(element.space().d());
    if (has_coarse_generator(element)) {
        fail(ErrorCode::CoarseGenerator, element.str() + " has a coarse generator; use coarse_response");
    }
    ResponseFunction out(element.space());
    for (const auto &lam : ontic_support(element)) {
        out.set(lam, Rational(1));
    }
    return out;
}

/// Indicator of {lambda : sigma_fg . lambda = value}.
inline ResponseFunction response_of_branch(const PhaseSpace &space, const FineBranch &branch) {
    ResponseFunction out(space);
    for (Int k = 0; k < space.num_points(); k++) {
        if (branch.sigma_fg.sigma().dot(space.point(k)) == branch.outcome) {
            out.set_at(k, Rational(1));
        }
    }
    return out;
}

/// One response per fine branch of a coarse observable.
inline std::vector<ResponseFunction> branch_responses(const PhaseSpace &space, const Observable &obs, Int outcome) {
    require_odd(space.d());
    space.check(obs.sigma());
    std::vector<ResponseFunction> out;
    for (const auto &b : fine_decomposition(obs, outcome)) {
        out.push_back(response_of_branch(space, b));
    }
    return out;
}

/// Average of the fine-branch indicators.
inline ResponseFunction coarse_response(const PhaseSpace &space, const Observable &obs, Int outcome) {
    auto parts = branch_responses(space, obs, outcome);
    ResponseFunction out(space);
    Rational share(1, static_cast<Int>(parts.size()));
    for (Int k = 0; k < space.num_points(); k++) {
        Rational acc(0);
        for (const auto &r : parts) {
            acc += r.at(k);
        }
        out.set_at(k, acc * share);
    }
    return out;
}

inline Rational wigner_born(const WignerMap &w, const ResponseFunction &r) {
    if (w.space() != r.space()) {
        fail(ErrorCode::DimensionMismatch, "Wigner map and response on different spaces");
    }
    Rational acc(0);
    for (Int k = 0; k < w.space().num_points(); k++) {
        acc += w.at(k) * r.at(k);
    }
    return acc;
}

/// Sum over the fine branches; the coarse outcome probability.
inline Rational coarse_born(const WignerMap &w, const Observable &obs, Int outcome) {
    Rational acc(0);
    for (const auto &r : branch_responses(w.space(), obs, outcome)) {
        acc += wigner_born(w, r);
    }
    return acc;
}

/// Response of any element: product over generators of the fine indicator
/// or the coarse average. `scale` (the product of branch counts) turns
/// wigner_born into the outcome probability.
struct ScaledResponse {
    ResponseFunction response;
    Int scale;
};

inline ScaledResponse element_response(const SharpMeasurement &element) {
    const PhaseSpace &space = element.space();
    require_odd(space.d());
    ResponseFunction out(space);
    for (Int k = 0; k < space.num_points(); k++) {
        out.set_at(k, Rational(1));
    }
    Int scale = 1;
    for (const auto &o : element.outcomes()) {
        Observable obs(o.generator);
        if (obs.is_zero()) {
            continue;
        }
        ResponseFunction part(space);
        if (is_fine(obs)) {
            part = response_of_branch(space, FineBranch{obs, o.value, space.zero()});
        } else {
            part = coarse_response(space, obs, o.value);
            scale *= static_cast<Int>(fine_decomposition(obs, o.value).size());
        }
        for (Int k = 0; k < space.num_points(); k++) {
            out.set_at(k, out.at(k) * part.at(k));
        }
    }
    return {std::move(out), scale};
}

/// W'(lambda) = (1/N) sum_t W(lambda - t) R(lambda).
inline WignerMap update_randomized(const WignerMap &w, const ResponseFunction &r, const std::vector<ModVector> &coset_reps) {
    const PhaseSpace &space = w.space();
    if (space != r.space()) {
        fail(ErrorCode::DimensionMismatch, "Wigner map and response on different spaces");
    }
    WignerMap out(space);
    Rational norm(0);
    for (Int k = 0; k < space.num_points(); k++) {
        if (r.at(k).numerator() == 0) {
            continue;
        }
        ModVector lam = space.point(k);
        Rational acc(0);
        for (const auto &t : coset_reps) {
            acc += w(lam - t);
        }
        acc *= r.at(k);
        out.set_at(k, acc);
        norm += acc;
    }
    if (norm.numerator() == 0) {
        fail(ErrorCode::ImpossibleOutcome, "Wigner-side normalization is zero");
    }
    for (Int k = 0; k < space.num_points(); k++) {
        out.set_at(k, out.at(k) / norm);
    }
    return out;
}

inline WignerMap update_product(const WignerMap &w, const ResponseFunction &r) {
    return update_randomized(w, r, {w.space().zero()});
}

inline WignerMap update_coarse_wigner(const WignerMap &w, const Observable &obs, Int outcome,
                                      const std::vector<ModVector> &coset_reps) {
    return update_randomized(w, coarse_response(w.space(), obs, outcome), coset_reps);
}

}  // namespace spekkens
