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

#include <array>
#include <cstdio>
#include <sys/wait.h>

#include "figures.h"
#include "spekkens/spekkens.h"

using namespace spekkens;

namespace {

struct Run {
    int status;
    std::string out;
};

Run run_cli(const std::string &args) {
    std::string cmd = std::string(SPEKKENS_CLI_PATH) + " " + args + " 2>&1";
    FILE *pipe = popen(cmd.c_str(), "r");
    std::string out;
    std::array<char, 4096> buf;
    while (std::size_t got = fread(buf.data(), 1, buf.size(), pipe)) {
        out.append(buf.data(), got);
    }
    int raw = pclose(pipe);
    return {WIFEXITED(raw) ? WEXITSTATUS(raw) : -1, out};
}

std::string sample(const std::string &name) {
    return std::string(SPEKKENS_SAMPLES_DIR) + "/" + name;
}

ErrorCode code_of(const std::function<void()> &f) {
    try {
        f();
    } catch (const Error &e) {
        return e.code();
    }
    ADD_FAILURE() << "no error raised";
    return ErrorCode::InvalidState;
}

}  // namespace

TEST(Parser, examples) {
    EXPECT_EQ(parse_observable("3X", 6, 1).sigma(), ModVector(6, {3, 0}));
    EXPECT_EQ(parse_observable("X+P", 3, 1).sigma(), ModVector(3, {1, 1}));
    EXPECT_EQ(parse_observable("2X1-P2", 5, 2).sigma(), ModVector(5, {2, 0, 0, 4}));
    EXPECT_EQ(parse_observable(" 2 X 1 - P 2 ", 5, 2).sigma(), ModVector(5, {2, 0, 0, 4}));
    EXPECT_EQ(parse_observable("X+X", 3, 1).sigma(), ModVector(3, {2, 0}));
    EXPECT_EQ(parse_observable("14P", 6, 1).sigma(), ModVector(6, {0, 2}));
}

TEST(Parser, terms_keep_offsets) {
    auto e = parse_observable_expr("X + 2P", 3, 1);
    ASSERT_EQ(e.terms.size(), 2u);
    EXPECT_EQ(e.terms[0].offset, 0u);
    EXPECT_EQ(e.terms[1].offset, 4u);
    EXPECT_EQ(e.terms[1].coefficient, 2);
    EXPECT_EQ(e.terms[1].variable, 'P');
}

TEST(Parser, errors) {
    EXPECT_EQ(code_of([] { parse_observable("", 3, 1); }), ErrorCode::SyntaxError);
    EXPECT_EQ(code_of([] { parse_observable("X+", 3, 1); }), ErrorCode::SyntaxError);
    EXPECT_EQ(code_of([] { parse_observable("Y", 3, 1); }), ErrorCode::SyntaxError);
    EXPECT_EQ(code_of([] { parse_observable("X P", 3, 1); }), ErrorCode::SyntaxError);
    EXPECT_EQ(code_of([] { parse_observable("X3", 3, 2); }), ErrorCode::IndexOutOfRange);
    EXPECT_EQ(code_of([] { parse_observable("X0", 3, 2); }), ErrorCode::IndexOutOfRange);
    EXPECT_EQ(code_of([] { parse_observable("3X", 3, 1); }), ErrorCode::ZeroObservable);
    EXPECT_EQ(code_of([] { parse_observable("X-X", 5, 1); }), ErrorCode::ZeroObservable);
    try {
        parse_observable("X+*P", 3, 1);
    } catch (const Error &e) {
        EXPECT_NE(std::string(e.what()).find("at byte 2"), std::string::npos) << e.what();
    }
}

TEST(Parser, print_parse_round_trip) {
    for (Int d : {3, 4, 6}) {
        for (std::size_t n : {1u, 2u}) {
            PhaseSpace space(d, n);
            for (const auto &v : space.points()) {
                if (v.is_zero()) {
                    continue;
                }
                Observable obs(v);
                std::string text = format_observable(obs);
                ASSERT_EQ(parse_observable(text, d, n), obs) << text;
                ASSERT_EQ(format_observable(parse_observable(text, d, n)), text);
            }
        }
    }
}

TEST(Render, golden_figures) {
    for (const auto &name : figures::kNames) {
        std::string want = figures::golden(name);
        ASSERT_FALSE(want.empty()) << name;
        EXPECT_EQ(figures::render(name), want) << name;
    }
}

TEST(Render, two_systems_as_point_list) {
    auto s = EpistemicState::from_outcomes(PhaseSpace(3, 2), {Observable(3, {1, 0, 0, 0}), Observable(3, {0, 0, 1, 0})},
                                           {1, 2});
    std::string text = render_grid(distribution(s));
    EXPECT_EQ(text.substr(0, 15), "(1,0,2,0)  1/9\n");
    EXPECT_EQ(std::count(text.begin(), text.end(), '\n'), 9);
}

TEST(StateIo, round_trip) {
    auto s = EpistemicState::from_outcomes(PhaseSpace(6, 1), {Observable(6, {3, 0})}, {3});
    auto doc = parse_state_document(state_to_json(s).dump());
    EXPECT_FALSE(validate_document(doc));
    EXPECT_EQ(state_from_document(doc), s);
    EXPECT_EQ(state_to_json(s)["version"], "v1");
}

TEST(StateIo, bad_documents) {
    for (std::string text : {"not json", "[]", R"({"d":3,"n":1,"V":[]})", R"({"d":3,"n":1,"V":[[1]],"w":[0,0]})",
                             R"({"d":3,"n":1,"V":[],"w":[0,3]})", R"({"version":"v2","d":3,"n":1,"V":[],"w":[0,0]})",
                             R"({"d":1,"n":1,"V":[],"w":[0,0]})"}) {
        EXPECT_EQ(code_of([&] { parse_state_document(text); }), ErrorCode::InvalidDocument) << text;
    }
}

TEST(StateIo, validate_reports) {
    auto conj = parse_state_document(R"({"d":3,"n":1,"V":[[1,0],[0,1]],"w":[0,0]})");
    EXPECT_EQ(*validate_document(conj), "V is not isotropic: <(1,0),(0,1)> = 1, expected 0");
    auto order = parse_state_document(R"({"d":3,"n":1,"V":[[2,0]],"w":[0,0]})");
    EXPECT_NE(validate_document(order)->find("canonical"), std::string::npos);
    auto shift = parse_state_document(R"({"d":3,"n":1,"V":[[1,0]],"w":[0,1]})");
    EXPECT_NE(validate_document(shift)->find("least"), std::string::npos);
    auto fine = parse_state_document(R"({"d":6,"n":1,"V":[[3,0]],"w":[1,0]})");
    EXPECT_FALSE(validate_document(fine));
    EXPECT_EQ(known_value(state_from_document(fine), Observable(6, {3, 0}))->value(), 3);
}

TEST(Cli, validate) {
    EXPECT_EQ(run_cli("validate " + sample("fig1b.json")).out, "ok\n");
    auto bad = run_cli("validate " + sample("conjugate_pair_invalid.json"));
    EXPECT_EQ(bad.status, 2);
    EXPECT_NE(bad.out.find("<(1,0),(0,1)> = 1"), std::string::npos);
}

TEST(Cli, support_grids) {
    auto r = run_cli("support " + sample("fig1c.json"));
    EXPECT_EQ(r.status, 0);
    EXPECT_NE(r.out.find(figures::golden("fig1c")), std::string::npos);
    EXPECT_NE(run_cli("support " + sample("fig1a.json")).out.find(figures::golden("fig1a")), std::string::npos);
}

TEST(Cli, measure_momentum) {
    auto r = run_cli("measure " + sample("fig1a.json") + " --obs P --outcome 2");
    EXPECT_EQ(r.status, 0) << r.out;
    EXPECT_NE(r.out.find("selected outcome 2: prob 1/3"), std::string::npos) << r.out;
    EXPECT_NE(r.out.find("V = span{(0,1)}"), std::string::npos);
    EXPECT_NE(r.out.find("w = (0,2)"), std::string::npos);
    EXPECT_NE(r.out.find(R"({"V":[[0,1]],"d":3,"n":1,"version":"v1","w":[0,2]})"), std::string::npos);
}

TEST(Cli, measure_errors) {
    EXPECT_EQ(run_cli("measure " + sample("fig1a.json") + " --obs X --outcome 1").status, 2);
    EXPECT_EQ(run_cli("measure " + sample("three_x_is_three_d6.json") + " --obs 3X --outcome 2").status, 2);
    EXPECT_EQ(run_cli("measure " + sample("fig1a.json") + " --obs Q --outcome 1").status, 2);
    EXPECT_EQ(run_cli("measure " + sample("fig1a.json")).status, 1);
    EXPECT_EQ(run_cli("frobnicate").status, 1);
    EXPECT_EQ(run_cli("support /nonexistent.json").status, 2);
}

TEST(Cli, sampling_is_deterministic) {
    std::string base = "measure " + sample("fig1c.json") + " --obs X+P --sample ";
    for (int seed = 0; seed < 5; seed++) {
        auto a = run_cli(base + std::to_string(seed));
        auto b = run_cli(base + std::to_string(seed));
        EXPECT_EQ(a.status, 0);
        EXPECT_EQ(a.out, b.out);
    }
}

TEST(Cli, wigner_and_even_dimension) {
    EXPECT_EQ(run_cli("wigner " + sample("fig1a.json")).out, figures::golden("fig1a"));
    auto r = run_cli("wigner " + sample("nothing_known_d6.json"));
    EXPECT_EQ(r.status, 2);
    EXPECT_NE(r.out.find("EvenDimension"), std::string::npos);
}

TEST(Cli, equiv_and_enumerate) {
    auto r = run_cli("equiv --d 3 --n 1 --exhaustive");
    EXPECT_EQ(r.status, 0);
    EXPECT_EQ(r.out, "144/144 cases pass\n");
    auto e = run_cli("enumerate --d 5 --n 1");
    EXPECT_NE(e.out.find("30 pure states"), std::string::npos);
    auto j = run_cli("equiv --d 5 --n 1 --cases 5 --jsonl -");
    EXPECT_EQ(std::count(j.out.begin(), j.out.end(), '\n'), 6);
}
