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


#include "spekkens/equivalence.h"

#include <gtest/gtest.h>

#include "oracle.h"

using namespace spekkens;

TEST(JMap, examples) {
    EXPECT_EQ(j_map(span_of(3, 2, {ModVector(3, {1, 0})})), span_of(3, 2, {ModVector(3, {0, 1})}));
    EXPECT_TRUE(j_map(Submodule(3, 2)).is_zero());
}

TEST(JMap, perp_is_symplectic_complement_of_m) {
    std::mt19937_64 rng(11);
    for (Int d : {3, 4, 6, 9}) {
        for (int t = 0; t < 30; t++) {
            Submodule v = howell_form(d, 4, oracle::random_rows(rng, d, 4, 1 + t % 3));
            auto lhs = oracle::annihilator(d, 4, oracle::elements(v), false);
            auto rhs = oracle::annihilator(d, 4, oracle::elements(j_map(v)), true);
            ASSERT_EQ(lhs, rhs);
            ASSERT_EQ(complement(v, Pairing::euclidean), complement(j_map(v), Pairing::symplectic));
        }
    }
}

TEST(StateEquivalence, all_pure_qutrit_states) {
    auto states = enumerate_pure_states(PhaseSpace(3, 1));
    ASSERT_EQ(states.size(), 12u);
    for (const auto &s : states) {
        auto r = check_state_equivalence(s);
        EXPECT_TRUE(r.pass) << to_json(r).dump();
    }
}

TEST(StateEquivalence, diagonal_state) {
    auto s = EpistemicState::from_outcomes(PhaseSpace(3, 1), {Observable(3, {1, 1})}, {0});
    auto support = ontic_support(s);
    EXPECT_EQ(support, (std::vector<ModVector>{ModVector(3, {0, 0}), ModVector(3, {1, 2}), ModVector(3, {2, 1})}));
    EXPECT_TRUE(check_state_equivalence(s).pass);
}

TEST(StateEquivalence, coarse_and_mixed) {
    EXPECT_TRUE(check_state_equivalence(
                    EpistemicState::from_outcomes(PhaseSpace(9, 1), {Observable(9, {3, 0})}, {0}))
                    .pass);
    EXPECT_TRUE(check_state_equivalence(EpistemicState::nothing_known(PhaseSpace(5, 1))).pass);
    EXPECT_TRUE(check_state_equivalence(
                    EpistemicState::from_outcomes(PhaseSpace(3, 2), {Observable(3, {1, 0, 1, 0})}, {2}))
                    .pass);
}

TEST(UpdateEquivalence, commuting_figure) {
    PhaseSpace space(3, 1);
    auto prior = EpistemicState::nothing_known(space);
    auto meas = SharpMeasurement::from_outcomes(space, {Observable(3, {0, 1})}, {0});
    for (const auto &e : measurement_elements(meas)) {
        auto r = check_update_equivalence(prior, e);
        EXPECT_TRUE(r.pass) << to_json(r).dump();
        EXPECT_EQ(r.st_prob, Rational(1, 3));
    }
}

TEST(UpdateEquivalence, non_commuting_figure) {
    PhaseSpace space(3, 1);
    auto prior = EpistemicState::from_outcomes(space, {Observable(3, {1, 0})}, {0});
    for (auto obs : {Observable(3, {1, 2}), Observable(3, {1, 1})}) {
        auto r = check_update_equivalence(prior, SharpMeasurement::from_outcomes(space, {obs}, {0}));
        EXPECT_TRUE(r.pass) << to_json(r).dump();
    }
}

TEST(UpdateEquivalence, coarse_nine) {
    PhaseSpace space(9, 1);
    for (auto prior : {EpistemicState::nothing_known(space),
                       EpistemicState::from_outcomes(space, {Observable(9, {0, 1})}, {0}),
                       EpistemicState::from_outcomes(space, {Observable(9, {1, 0})}, {4})}) {
        for (Int k : {0, 3, 6}) {
            auto r = check_update_equivalence(prior, SharpMeasurement::from_outcomes(space, {Observable(9, {3, 0})}, {k}));
            EXPECT_TRUE(r.pass) << to_json(r).dump();
        }
    }
}

TEST(UpdateEquivalence, impossible_on_every_route) {
    PhaseSpace space(3, 1);
    auto prior = EpistemicState::from_outcomes(space, {Observable(3, {1, 0})}, {0});
    auto r = check_update_equivalence(prior, SharpMeasurement::from_outcomes(space, {Observable(3, {1, 0})}, {1}));
    EXPECT_TRUE(r.pass);
    EXPECT_TRUE(r.st.impossible);
    EXPECT_TRUE(r.wigner.impossible);
    EXPECT_TRUE(r.oracle.impossible);
}

TEST(UpdateEquivalence, exhaustive_qutrit) {
    auto cases = exhaustive_cases(3, 1);
    ASSERT_EQ(cases.size(), 144u);
    for (const auto &c : cases) {
        auto r = check_update_equivalence(c.state, c.element);
        ASSERT_TRUE(r.pass) << to_json(r).dump();
    }
}

TEST(UpdateEquivalence, sampled_spots) {
    for (auto [d, n] : {std::pair<Int, std::size_t>{5, 1}, {9, 1}, {3, 2}}) {
        for (const auto &c : sampled_cases(d, n, 40, 7)) {
            auto r = check_update_equivalence(c.state, c.element);
            ASSERT_TRUE(r.pass) << to_json(r).dump();
        }
    }
}

TEST(Report, json_line_fields) {
    PhaseSpace space(3, 1);
    auto r = check_update_equivalence(EpistemicState::nothing_known(space),
                                      SharpMeasurement::from_outcomes(space, {Observable(3, {1, 0})}, {2}));
    auto j = to_json(r);
    EXPECT_EQ(j["pass"], true);
    EXPECT_EQ(j["routes"]["st"]["prob"], "1/3");
    EXPECT_EQ(j["routes"]["wigner"]["prob"], "1/3");
    EXPECT_TRUE(j.contains("max_abs_err"));
    EXPECT_EQ(j.dump().find('\n'), std::string::npos);
}
