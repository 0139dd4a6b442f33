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


// spekkens_cli: inspect, measure and cross-check epistemic states.
//
// Exit status: 0 success, 1 usage error, 2 domain error.

#include <fstream>
#include <iostream>
#include <numeric>
#include <random>

#include "CLI11.hpp"
#include "spekkens/spekkens.h"

using namespace spekkens;

namespace {

void print_state(std::ostream &out, const EpistemicState &s) {
    out << "V = " << s.known().str() << "\n";
    out << "V_perp = " << s.perp().str() << "\n";
    out << "w = " << s.shift().str() << "\n";
    out << "support: " << s.perp().size() << " points\n";
}

int cmd_validate(const std::string &path) {
    auto doc = parse_state_document(read_text_file(path));
    if (auto bad = validate_document(doc)) {
        std::cout << "invalid: " << *bad << "\n";
        return 2;
    }
    std::cout << "ok\n";
    return 0;
}

int cmd_support(const std::string &path) {
    auto s = load_state(path);
    print_state(std::cout, s);
    std::cout << render_grid(distribution(s));
    return 0;
}

int cmd_wigner(const std::string &path) {
    auto s = load_state(path);
    std::cout << render_grid(wigner_of_epistemic(s));
    return 0;
}

std::string outcome_label(const SharpMeasurement &e) {
    if (e.outcomes().size() == 1) {
        return std::to_string(e.outcomes()[0].value);
    }
    std::string out = "(";
    for (std::size_t k = 0; k < e.outcomes().size(); k++) {
        out += (k ? "," : "") + std::to_string(e.outcomes()[k].value);
    }
    return out + ")";
}

/// Index drawn from exact probabilities: a uniform integer below the common
/// denominator, compared against cumulative numerators.
std::size_t draw(const std::vector<Rational> &probs, std::uint64_t seed) {
    Int denom = 1;
    for (const auto &p : probs) {
        denom = std::lcm(denom, p.denominator());
    }
    std::mt19937_64 rng(seed);
    Int ticket = static_cast<Int>(rng() % static_cast<std::uint64_t>(denom));
    Int acc = 0;
    for (std::size_t k = 0; k < probs.size(); k++) {
        acc += probs[k].numerator() * (denom / probs[k].denominator());
        if (ticket < acc) {
            return k;
        }
    }
    return probs.size() - 1;
}

int cmd_measure(const std::string &path, const std::vector<std::string> &exprs, const std::vector<Int> &outcome,
                const std::optional<std::uint64_t> &seed, const std::string &out_path) {
    auto s = load_state(path);
    const PhaseSpace &space = s.space();
    std::vector<Observable> gens;
    std::string names;
    for (const auto &e : exprs) {
        gens.push_back(parse_observable(e, space.d(), space.n()));
        names += (names.empty() ? "" : ", ") + format_observable(gens.back());
    }
    if (!outcome.empty() && outcome.size() != gens.size()) {
        throw CLI::ValidationError("--outcome", "give one outcome per --obs");
    }
    auto meas = SharpMeasurement::from_outcomes(space, gens, std::vector<Int>(gens.size(), 0));
    auto probs = outcome_probabilities(s, meas);
    std::cout << "measure " << names << "\n";
    for (const auto &[e, p] : probs) {
        std::cout << "outcome " << outcome_label(e) << ": " << to_string(p) << "\n";
    }
    std::optional<SharpMeasurement> chosen;
    if (!outcome.empty()) {
        chosen = SharpMeasurement::from_outcomes(space, gens, outcome);
    } else if (seed) {
        std::vector<Rational> ps;
        for (const auto &pr : probs) {
            ps.push_back(pr.second);
        }
        chosen = probs[draw(ps, *seed)].first;
    }
    if (!chosen) {
        return 0;
    }
    Rational p = outcome_probability(s, *chosen);
    std::cout << "selected outcome " << outcome_label(*chosen) << ": prob " << to_string(p) << "\n";
    auto post = update(s, *chosen);
    std::cout << "posterior\n";
    print_state(std::cout, post);
    std::cout << render_grid(distribution(post));
    std::string json = state_to_json(post).dump();
    if (out_path.empty()) {
        std::cout << json << "\n";
    } else {
        std::ofstream(out_path) << json << "\n";
        std::cout << "wrote " << out_path << "\n";
    }
    return 0;
}

int cmd_equiv(Int d, std::size_t n, bool exhaustive, std::size_t count, std::uint64_t seed,
              const std::string &jsonl) {
    auto cases = exhaustive ? exhaustive_cases(d, n) : sampled_cases(d, n, count, seed);
    std::ofstream file;
    std::ostream *log = nullptr;
    if (jsonl == "-") {
        log = &std::cout;
    } else if (!jsonl.empty()) {
        file.open(jsonl);
        log = &file;
    }
    std::size_t passed = 0;
    for (std::size_t k = 0; k < cases.size(); k++) {
        auto r = check_update_equivalence(cases[k].state, cases[k].element, "case-" + std::to_string(k));
        passed += r.pass;
        if (log) {
            *log << to_json(r).dump() << "\n";
        }
    }
    std::cout << passed << "/" << cases.size() << " cases pass\n";
    return passed == cases.size() ? 0 : 2;
}

int cmd_enumerate(Int d, std::size_t n) {
    PhaseSpace space(d, n);
    auto states = enumerate_pure_states(space);
    for (const auto &s : states) {
        std::cout << s.str();
        if (d % 2 == 1) {
            std::cout << "  " << from_epistemic(s).str();
        }
        std::cout << "\n";
    }
    std::cout << states.size() << " pure states\n";
    return 0;
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"Epistemic states on Z_d phase space"};
    app.require_subcommand(1);

    std::string file;
    auto *validate = app.add_subcommand("validate", "check a state document");
    validate->add_option("FILE", file)->required();
    auto *support = app.add_subcommand("support", "print V, V_perp and the support grid");
    support->add_option("FILE", file)->required();
    auto *wigner = app.add_subcommand("wigner", "print the Wigner map (odd d)");
    wigner->add_option("FILE", file)->required();

    auto *measure = app.add_subcommand("measure", "outcome probabilities and posterior");
    std::vector<std::string> exprs;
    std::vector<Int> outcome;
    std::optional<std::uint64_t> seed;
    std::string out_path;
    measure->add_option("FILE", file)->required();
    measure->add_option("--obs", exprs, "observable, e.g. \"X+2P\"; repeat for more generators")->required();
    auto *outcome_opt = measure->add_option("--outcome", outcome, "outcome value per observable");
    measure->add_option("--sample", seed, "draw the outcome with this seed")->excludes(outcome_opt);
    measure->add_option("--out", out_path, "write the posterior JSON here");

    Int d = 3;
    std::size_t n = 1, count = 100;
    std::uint64_t equiv_seed = 1;
    bool exhaustive = false;
    std::string jsonl;
    auto *equiv = app.add_subcommand("equiv", "three-route equivalence sweep (odd d)");
    equiv->add_option("--d", d)->required();
    equiv->add_option("--n", n)->required();
    equiv->add_flag("--exhaustive", exhaustive, "all pure states against all pure elements");
    equiv->add_option("--cases", count, "sampled cases when not exhaustive");
    equiv->add_option("--seed", equiv_seed);
    equiv->add_option("--jsonl", jsonl, "write one JSON report per case ('-' for stdout)");

    auto *enumerate = app.add_subcommand("enumerate", "list pure states");
    enumerate->add_option("--d", d)->required();
    enumerate->add_option("--n", n)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        return app.exit(e) == 0 ? 0 : 1;
    }

    try {
        if (*validate) {
            return cmd_validate(file);
        }
        if (*support) {
            return cmd_support(file);
        }
        if (*wigner) {
            return cmd_wigner(file);
        }
        if (*measure) {
            return cmd_measure(file, exprs, outcome, seed, out_path);
        }
        if (*equiv) {
            return cmd_equiv(d, n, exhaustive, count, equiv_seed, jsonl);
        }
        if (*enumerate) {
            return cmd_enumerate(d, n);
        }
    } catch (const CLI::ValidationError &e) {
        std::cerr << "usage: " << e.what() << "\n";
        return 1;
    } catch (const Error &e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 1;
}
