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


// Fine- and coarse-graining observables. A coarse observable is
// D * Sigma_fg with Sigma_fg of full spectrum; its outcome s splits into the
// D fine outcomes s/D + jC, C = d/D.

#pragma once

#include <numeric>
#include <string>
#include <vector>

#include "spekkens/phase_space.h"

namespace spekkens {

enum class Graining { Fine, Coarse };

struct GrainingInfo {
    Graining kind;
    /// Degeneracy: gcd of the coefficients and d. 1 when fine.
    Int D;
    /// Product of the distinct primes of D.
    Int Dbar;
    /// Anti-degeneracy d / D when coarse, 0 when fine.
    Int C;
    /// Full-spectrum observable with D * sigma_fg = sigma.
    Observable sigma_fg;
    /// Generator of the degeneracy direction: sigma_fg^T v = C.
    ModVector v;
};

inline Int radical(Int m) {
    Int out = 1;
    for (Int p = 2; p * p <= m; p++) {
        if (m % p == 0) {
            out *= p;
            while (m % p == 0) {
                m /= p;
            }
        }
    }
    return m > 1 ? out * m : out;
}

inline Int content(const ModVector &v) {
    Int g = v.modulus();
    for (Int e : v.entries()) {
        g = std::gcd(g, e);
    }
    return g;
}

namespace detail {

/// Lexicographically least sigma_fg with sigma_fg = base mod d/D, content 1,
/// and the zero entries of base left at zero (so 3X gives X and 4X at d=6
/// gives 5X). Entry k ranges over base[k] + j * (d/D), j < D, increasing in
/// j, so odometer order is lexicographic order. Such a lift always exists:
/// the primes of d missing from d/D all divide D, and CRT finds a j for a
/// single nonzero entry.
inline ModVector full_spectrum_lift(const std::vector<Int> &base, Int d, Int D) {
    Int step = d / D;
    std::vector<std::size_t> free;
    for (std::size_t k = 0; k < base.size(); k++) {
        if (base[k] != 0) {
            free.push_back(k);
        }
    }
    std::vector<Int> digit(free.size(), 0);
    while (true) {
        std::vector<Int> entries = base;
        for (std::size_t k = 0; k < free.size(); k++) {
            entries[free[k]] += digit[k] * step;
        }
        ModVector candidate(d, entries);
        if (content(candidate) == 1) {
            return candidate;
        }
        std::size_t k = free.size();
        while (k > 0 && digit[k - 1] == D - 1) {
            digit[k - 1] = 0;
            k--;
        }
        if (k == 0) {
            fail(ErrorCode::NotCoarse, "no full-spectrum lift (unreachable)");
        }
        digit[k - 1]++;
    }
}

}  // namespace detail

inline GrainingInfo classify(const Observable &obs) {
    const ModVector &sigma = obs.sigma();
    if (sigma.is_zero()) {
        fail(ErrorCode::ZeroObservable, "the zero observable has no outcomes to classify");
    }
    Int d = sigma.modulus();
    Int D = content(sigma);
    Int C = d / D;
    if (D == 1) {
        return {Graining::Fine, 1, 1, 0, obs, ModVector(d, sigma.size())};
    }
    std::vector<Int> base;
    for (Int e : sigma.entries()) {
        base.push_back(e / D);
    }
    ModVector fg = detail::full_spectrum_lift(base, d, D);
    ModVector v = C * fg;
    if (fg.dot(v) != C) {
        auto gamma = solve_linear(d, fg.size(), std::vector<ModVector>{fg}, ModVector(d, {1}));
        v = C * gamma->particular;
    }
    return {Graining::Coarse, D, radical(D), C, Observable(fg), v};
}

inline bool is_fine(const Observable &obs) {
    return classify(obs).kind == Graining::Fine;
}

struct FineBranch {
    Observable sigma_fg;
    /// sigma_fg^T r on this branch: outcome_cg / D + j C.
    Int outcome;
    /// r_cg + j v.
    ModVector shift;
};

/// Splits the coarse outcome into its D fine cosets, j = 0 .. D-1. The
/// cosets partition perp(span{sigma}) + r_cg.
inline std::vector<FineBranch> fine_decomposition(const Observable &obs, Int outcome_cg) {
    GrainingInfo info = classify(obs);
    if (info.kind == Graining::Fine) {
        fail(ErrorCode::NotCoarse, obs.sigma().str() + " has full spectrum");
    }
    Int d = obs.sigma().modulus();
    Int s = reduce_mod(outcome_cg, d);
    if (s % info.D != 0) {
        fail(ErrorCode::InvalidOutcome, "outcome " + std::to_string(s) + " is not a multiple of the degeneracy " +
                                            std::to_string(info.D));
    }
    const ModVector &fg = info.sigma_fg.sigma();
    auto sol = solve_linear(d, fg.size(), std::vector<ModVector>{fg}, ModVector(d, {s / info.D}));
    ModVector r_cg = sol->kernel.reduce(sol->particular);
    std::vector<FineBranch> out;
    for (Int j = 0; j < info.D; j++) {
        out.push_back({info.sigma_fg, s / info.D + j * info.C, r_cg + j * info.v});
    }
    return out;
}

}  // namespace spekkens
