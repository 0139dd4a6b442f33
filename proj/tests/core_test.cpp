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

#include <gtest/gtest.h>

#include <map>

#include "oracle.h"
#include "spekkens/epistemic.h"

using namespace spekkens;

namespace {

EpistemicState make(Int d, std::size_t n, std::vector<Observable> gens, std::vector<Int> values) {
    return EpistemicState::from_outcomes(PhaseSpace(d, n), gens, values);
}

std::vector<ModVector> pts(Int d, std::initializer_list<std::initializer_list<Int>> list) {
    std::vector<ModVector> out;
    for (auto e : list) {
        out.emplace_back(d, e);
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

TEST(PhaseSpace, layout_and_indexing) {
    PhaseSpace s(3, 2);
    EXPECT_EQ(s.dim(), 4u);
    EXPECT_EQ(s.num_points(), 81);
    EXPECT_EQ(s.hilbert_dim(), 9);
    for (Int k = 0; k < s.num_points(); k++) {
        ASSERT_EQ(s.index(s.point(k)), k);
    }
    EXPECT_THROW(PhaseSpace(1, 1), Error);
    EXPECT_THROW(s.index(ModVector(3, {1, 0})), Error);
}

TEST(Evaluate, inner_products) {
    EXPECT_EQ(evaluate(Observable(3, {1, 0}), ModVector(3, {2, 1})).value(), 2);
    EXPECT_EQ(evaluate(Observable(6, {3, 0}), ModVector(6, {2, 5})).value(), 0);
    EXPECT_EQ(evaluate(Observable(3, {1, 0, 0, 1}), ModVector(3, {2, 0, 1, 2})).value(), 1);
    EXPECT_THROW(evaluate(Observable(3, {1, 0}), ModVector(3, {1, 0, 0, 0})), Error);
}

TEST(SymplecticProduct, commutation) {
    EXPECT_EQ(symplectic_product(Observable(3, {1, 0}), Observable(3, {0, 1})).value(), 1);
    EXPECT_FALSE(commutes(Observable(3, {1, 0}), Observable(3, {0, 1})));
    EXPECT_TRUE(commutes(Observable(3, {1, 0}), Observable(3, {2, 0})));
    EXPECT_TRUE(commutes(Observable(6, {3, 0}), Observable(6, {0, 2})));
    // Brute-force matrix evaluation.
    std::mt19937_64 rng(2);
    for (int i = 0; i < 100; i++) {
        auto a = oracle::random_vector(rng, 6, 4), b = oracle::random_vector(rng, 6, 4);
        ASSERT_EQ(symplectic_product(Observable(a), Observable(b)).value(), oracle::sympl(a, b));
    }
}

TEST(Validate, reports_non_isotropic_pair) {
    PhaseSpace s(3, 1);
    EpistemicState bad(s, span_of(3, 2, {ModVector(3, {1, 0}), ModVector(3, {0, 1})}), s.zero(), {});
    auto v = validate(bad);
    ASSERT_TRUE(v);
    EXPECT_NE(v->find("<(1,0),(0,1)> = 1"), std::string::npos) << *v;
}

TEST(Validate, accepts_figure_states) {
    PhaseSpace s(3, 1);
    EXPECT_FALSE(validate(EpistemicState::from_parts(s, span_of(3, 2, {ModVector(3, {1, 1})}), s.zero())));
    PhaseSpace s6(6, 1);
    auto coarse = EpistemicState::from_parts(s6, span_of(6, 2, {ModVector(6, {3, 0})}), ModVector(6, {1, 0}));
    EXPECT_FALSE(validate(coarse));
    EXPECT_EQ(known_value(coarse, Observable(6, {3, 0}))->value(), 3);
}

TEST(Validate, catches_drift_and_noncanonical_shift) {
    PhaseSpace s(3, 1);
    auto v = span_of(3, 2, {ModVector(3, {1, 0})});
    EpistemicState drift(s, v, s.zero(), {{ModVector(3, {1, 0}), 1}});
    EXPECT_TRUE(validate(drift));
    EpistemicState shifted(s, v, ModVector(3, {0, 2}), {{ModVector(3, {1, 0}), 0}});
    EXPECT_TRUE(validate(shifted));
    EpistemicState outside(s, v, s.zero(), {{ModVector(3, {0, 1}), 0}});
    EXPECT_TRUE(validate(outside));
}

TEST(Factories, reject_bad_input) {
    PhaseSpace s(3, 1);
    try {
        make(3, 1, {Observable(3, {1, 0}), Observable(3, {0, 1})}, {0, 0});
        FAIL();
    } catch (const Error &e) {
        EXPECT_EQ(e.code(), ErrorCode::InvalidState);
    }
    try {
        make(3, 1, {Observable(3, {1, 0}), Observable(3, {2, 0})}, {0, 1});
        FAIL();
    } catch (const Error &e) {
        EXPECT_EQ(e.code(), ErrorCode::InvalidState);
    }
    try {
        SharpMeasurement::from_outcomes(PhaseSpace(6, 1), {Observable(6, {3, 0})}, {2});
        FAIL();
    } catch (const Error &e) {
        EXPECT_EQ(e.code(), ErrorCode::InvalidOutcome);
    }
}

TEST(OnticSupport, figure_states) {
    auto fig1a = make(3, 1, {Observable(3, {1, 0})}, {0});
    EXPECT_EQ(ontic_support(fig1a), pts(3, {{0, 0}, {0, 1}, {0, 2}}));
    EXPECT_EQ(fig1a.perp(), span_of(3, 2, {ModVector(3, {0, 1})}));
    auto fig1b = make(3, 1, {Observable(3, {1, 1})}, {0});
    EXPECT_EQ(ontic_support(fig1b), pts(3, {{0, 0}, {1, 2}, {2, 1}}));
    auto fig1c = EpistemicState::nothing_known(PhaseSpace(3, 1));
    EXPECT_EQ(ontic_support(fig1c).size(), 9u);
    auto shifted = EpistemicState::from_parts(PhaseSpace(3, 1), span_of(3, 2, {ModVector(3, {1, 1})}),
                                              ModVector(3, {1, 0}));
    EXPECT_EQ(ontic_support(shifted), pts(3, {{1, 0}, {2, 2}, {0, 1}}));
}

TEST(Distribution, weights) {
    auto fig1a = make(3, 1, {Observable(3, {1, 0})}, {0});
    auto p = distribution(fig1a);
    EXPECT_EQ(p(ModVector(3, {0, 2})), Rational(1, 3));
    EXPECT_EQ(p(ModVector(3, {1, 2})), Rational(0));
    EXPECT_EQ(p.total(), Rational(1));
    auto c = distribution(EpistemicState::nothing_known(PhaseSpace(3, 1)));
    EXPECT_EQ(c(ModVector(3, {2, 2})), Rational(1, 9));
    auto coarse = distribution(make(6, 1, {Observable(6, {3, 0})}, {0}));
    EXPECT_EQ(coarse.support().size(), 18u);
    EXPECT_EQ(coarse(ModVector(6, {2, 5})), Rational(1, 18));
    EXPECT_EQ(coarse.total(), Rational(1));
}

TEST(KnownValue, examples) {
    auto fig1a = make(3, 1, {Observable(3, {1, 0})}, {0});
    EXPECT_EQ(known_value(fig1a, Observable(3, {1, 0}))->value(), 0);
    EXPECT_FALSE(known_value(fig1a, Observable(3, {0, 1})));
    EXPECT_EQ(known_value(fig1a, Observable(3, {2, 0}))->value(), 0);
}

namespace {

/// Random isotropic V built by growing inside the symplectic complement.
Submodule random_isotropic(std::mt19937_64 &rng, const PhaseSpace &s, int steps) {
    Submodule v = s.nothing();
    for (int k = 0; k < steps; k++) {
        auto room = enumerate_elements(complement(v, Pairing::symplectic));
        std::uniform_int_distribution<std::size_t> pick(0, room.size() - 1);
        v = direct_sum(v, span_of(s.d(), s.dim(), {room[pick(rng)]}));
    }
    return v;
}

}  // namespace

TEST(StateProperties, random_states) {
    std::mt19937_64 rng(17);
    for (Int d = 2; d <= 9; d++) {
        for (std::size_t n : {1u, 2u}) {
            PhaseSpace space(d, n);
            for (int trial = 0; trial < 8; trial++) {
                Submodule v = random_isotropic(rng, space, 1 + trial % 3);
                auto w = oracle::random_vector(rng, d, space.dim());
                auto state = EpistemicState::from_parts(space, v, w);
                ASSERT_FALSE(validate(state)) << *validate(state);
                auto support = ontic_support(state);
                ASSERT_EQ(static_cast<Int>(support.size()) * v.size(), space.num_points());
                ASSERT_EQ(distribution(state).total(), Rational(1));
                // Known variables are constant on the support.
                for (const auto &g : oracle::elements(v)) {
                    auto kv = known_value(state, Observable(g));
                    ASSERT_TRUE(kv);
                    for (const auto &lam : support) {
                        ASSERT_EQ(evaluate(Observable(g), lam), *kv);
                    }
                }
                // Unknown variables are balanced on the support.
                auto probe = Observable(oracle::random_vector(rng, d, space.dim()));
                if (!known_value(state, probe)) {
                    std::map<Int, int> hist;
                    for (const auto &lam : support) {
                        hist[evaluate(probe, lam).value()]++;
                    }
                    ASSERT_GT(hist.size(), 1u);
                    for (const auto &[k, c] : hist) {
                        ASSERT_EQ(c, hist.begin()->second);
                    }
                }
                // Shifting by perp(V) changes nothing.
                auto moved = EpistemicState::from_parts(space, v, w + enumerate_elements(state.perp()).back());
                ASSERT_EQ(moved, state);
                ASSERT_EQ(moved.shift(), state.shift());
                ASSERT_EQ(ontic_support(moved), support);
            }
        }
    }
}

TEST(PureStates, counts) {
    EXPECT_EQ(enumerate_pure_states(PhaseSpace(3, 1)).size(), 12u);
    EXPECT_EQ(enumerate_pure_states(PhaseSpace(5, 1)).size(), 30u);
    EXPECT_EQ(enumerate_pure_states(PhaseSpace(2, 1)).size(), 6u);
    auto d9 = enumerate_pure_states(PhaseSpace(9, 1));
    EXPECT_EQ(d9.size() % 9, 0u);
    for (const auto &s : d9) {
        ASSERT_EQ(s.known().size(), 9);
        ASSERT_EQ(complement(s.known(), Pairing::symplectic), s.known());
    }
}
