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


// Three routes to the same numbers: epistemic states, exact Wigner maps and
// dense density operators. Each check returns a report instead of throwing.

#pragma once

#include <algorithm>
#include <cmath>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "json.hpp"
#include "spekkens/hilbert.h"
#include "spekkens/wigner.h"

namespace spekkens {

/// M = J V.
inline Submodule j_map(const Submodule &v) {
    std::vector<ModVector> rows;
    for (const auto &row : v.rows()) {
        rows.push_back(apply_symplectic(row));
    }
    return howell_form(v.modulus(), v.ambient(), rows);
}

/// Largest |exact - approx| over phase space.
inline double max_abs_error(const PhaseFunction<WignerTag> &exact, const std::vector<Complex> &approx) {
    double worst = 0.0;
    for (Int k = 0; k < exact.space().num_points(); k++) {
        worst = std::max(worst, std::abs(approx[static_cast<std::size_t>(k)] - to_double(exact.at(k))));
    }
    return worst;
}

struct StateReport {
    std::string id;
    bool exact_agree = false;
    double max_abs_err = 0.0;
    bool pass = false;
};

inline StateReport check_state_equivalence(const EpistemicState &s, std::string id = "") {
    require_odd(s.space().d());
    StateReport out;
    out.id = id.empty() ? s.str() : std::move(id);
    WignerMap w = wigner_of_epistemic(s);
    EpistemicDistribution p = distribution(s);
    out.exact_agree = p.values() == w.values();
    auto oracle = wigner_of_density(s.space(), density_of_group(from_epistemic(s)));
    out.max_abs_err = max_abs_error(w, oracle);
    out.pass = out.exact_agree && out.max_abs_err <= kOracleTolerance;
    return out;
}

struct RouteResult {
    bool impossible = false;
    std::string error;
};

struct UpdateReport {
    std::string id;
    RouteResult st, wigner, oracle;
    Rational st_prob{0}, wigner_prob{0};
    double oracle_prob = 0.0;
    bool exact_agree = false;
    double max_abs_err = 0.0;
    bool pass = false;
};

inline UpdateReport check_update_equivalence(const EpistemicState &state, const SharpMeasurement &element,
                                             std::string id = "") {
    const PhaseSpace &space = state.space();
    require_odd(space.d());
    check_same_space(state, element);
    UpdateReport out;
    out.id = id.empty() ? state.str() + " | " + element.str() : std::move(id);

    // Epistemic route.
    std::optional<WignerMap> st_post;
    out.st_prob = outcome_probability(state, element);
    try {
        st_post = wigner_of_epistemic(update(state, element));
    } catch (const Error &e) {
        out.st.impossible = e.code() == ErrorCode::ImpossibleOutcome;
        out.st.error = e.what();
    }

    // Wigner route.
    std::optional<WignerMap> w_post;
    WignerMap prior = wigner_of_epistemic(state);
    auto reps = split_commuting(state, element).coset_reps;
    try {
        if (has_coarse_generator(element)) {
            auto [resp, scale] = element_response(element);
            out.wigner_prob = wigner_born(prior, resp) * Rational(scale);
            w_post = update_randomized(prior, resp, reps);
        } else {
            auto resp = response_of_element(element);
            out.wigner_prob = wigner_born(prior, resp);
            w_post = update_randomized(prior, resp, reps);
        }
    } catch (const Error &e) {
        out.wigner.impossible = e.code() == ErrorCode::ImpossibleOutcome;
        out.wigner.error = e.what();
    }

    // Dense route.
    std::optional<std::vector<Complex>> o_post;
    DenseOperator rho = density_of_group(from_epistemic(state));
    DenseOperator proj = projector_of_group(from_epistemic(element));
    out.oracle_prob = (proj * rho).trace().real();
    try {
        o_post = wigner_of_density(space, luders(rho, proj).posterior);
    } catch (const Error &e) {
        out.oracle.impossible = e.code() == ErrorCode::ImpossibleOutcome;
        out.oracle.error = e.what();
    }

    out.max_abs_err = std::abs(out.oracle_prob - to_double(out.st_prob));
    bool same_fate = out.st.impossible == out.wigner.impossible && out.st.impossible == out.oracle.impossible;
    bool all_ran = (st_post && w_post && o_post) || (out.st.impossible && same_fate);
    out.exact_agree = out.st_prob == out.wigner_prob && (!st_post || !w_post || *st_post == *w_post);
    if (st_post && o_post) {
        out.max_abs_err = std::max(out.max_abs_err, max_abs_error(*st_post, *o_post));
    }
    out.pass = same_fate && all_ran && out.exact_agree && out.max_abs_err <= kOracleTolerance;
    return out;
}

inline nlohmann::json to_json(const StateReport &r) {
    return {{"case", r.id}, {"exact_agree", r.exact_agree}, {"max_abs_err", r.max_abs_err}, {"pass", r.pass}};
}

inline nlohmann::json route_json(const RouteResult &r, const std::string &prob) {
    nlohmann::json out{{"impossible", r.impossible}, {"prob", prob}};
    if (!r.error.empty() && !r.impossible) {
        out["error"] = r.error;
    }
    return out;
}

inline nlohmann::json to_json(const UpdateReport &r) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.12g", r.oracle_prob);
    return {{"case", r.id},
            {"routes",
             {{"st", route_json(r.st, to_string(r.st_prob))},
              {"wigner", route_json(r.wigner, to_string(r.wigner_prob))},
              {"oracle", route_json(r.oracle, buf)}}},
            {"pass", r.pass},
            {"max_abs_err", r.max_abs_err}};
}

struct EquivalenceCase {
    EpistemicState state;
    SharpMeasurement element;
};

/// Every pure state against every pure fine element.
inline std::vector<EquivalenceCase> exhaustive_cases(Int d, std::size_t n) {
    PhaseSpace space(d, n);
    auto states = enumerate_pure_states(space);
    std::vector<EquivalenceCase> out;
    for (const auto &s : states) {
        for (const auto &e : states) {
            out.push_back({s, SharpMeasurement::from_parts(space, e.known(), e.shift())});
        }
    }
    return out;
}

/// Random isotropic states (any rank, coarse generators allowed) against
/// random elements, seeded.
inline std::vector<EquivalenceCase> sampled_cases(Int d, std::size_t n, std::size_t count, std::uint64_t seed) {
    PhaseSpace space(d, n);
    std::mt19937_64 rng(seed);
    auto subs = enumerate_isotropic_submodules(space);
    std::uniform_int_distribution<std::size_t> pick(0, subs.size() - 1);
    std::uniform_int_distribution<Int> point(0, space.num_points() - 1);
    std::vector<EquivalenceCase> out;
    while (out.size() < count) {
        const Submodule &v = subs[pick(rng)];
        const Submodule &v_pi = subs[pick(rng)];
        if (v_pi.is_zero()) {
            continue;
        }
        out.push_back({EpistemicState::from_parts(space, v, space.point(point(rng))),
                       SharpMeasurement::from_parts(space, v_pi, space.point(point(rng)))});
    }
    return out;
}

}  // namespace spekkens
