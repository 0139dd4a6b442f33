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


// Observable expressions such as "X+P", "3X", "2X1-P2".
//
//     expr := term (('+' | '-') term)*
//     term := [integer] ('X' | 'P') [index]
//
// Whitespace is ignored, a missing coefficient is 1, a missing index is 1.

#pragma once

#include <cctype>
#include <string>
#include <string_view>
#include <vector>

#include "spekkens/phase_space.h"

namespace spekkens {

struct ObservableTerm {
    Int coefficient;  // reduced mod d, sign applied
    char variable;    // 'X' or 'P'
    std::size_t index;  // 1-based system
    std::size_t offset; // byte offset of the term in the source
};

struct ObservableExpr {
    std::string source;
    std::vector<ObservableTerm> terms;
};

namespace detail {

class ExprScanner {
   public:
    ExprScanner(std::string_view text, Int d, std::size_t n) : text_(text), d_(d), n_(n) {
    }

    ObservableExpr parse() {
        ObservableExpr out{std::string(text_), {}};
        skip();
        out.terms.push_back(term(1));
        for (skip(); pos_ < text_.size(); skip()) {
            char c = text_[pos_];
            if (c != '+' && c != '-') {
                error("expected '+' or '-'");
            }
            pos_++;
            skip();
            out.terms.push_back(term(c == '+' ? 1 : -1));
        }
        return out;
    }

   private:
    ObservableTerm term(Int sign) {
        std::size_t start = pos_;
        Int coefficient = 1;
        if (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            coefficient = number();
            skip();
        }
        if (pos_ >= text_.size()) {
            error("expected 'X' or 'P'");
        }
        char var = text_[pos_];
        if (var != 'X' && var != 'P') {
            error("expected 'X' or 'P'");
        }
        pos_++;
        skip();
        std::size_t index = 1;
        if (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            std::size_t at = pos_;
            Int raw = 0;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
                raw = std::min<Int>(raw * 10 + (text_[pos_] - '0'), 1'000'000'000);
                pos_++;
            }
            if (raw < 1 || raw > static_cast<Int>(n_)) {
                fail(ErrorCode::IndexOutOfRange, "at byte " + std::to_string(at) + ": system index " +
                                                     std::to_string(raw) + " is outside 1.." + std::to_string(n_));
            }
            index = static_cast<std::size_t>(raw);
        }
        return {reduce_mod(sign * coefficient, d_), var, index, start};
    }

    /// Decimal integer, reduced mod d as it is read.
    Int number() {
        Int value = 0;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            value = (value * 10 + (text_[pos_] - '0')) % d_;
            pos_++;
        }
        return value;
    }

    void skip() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) {
            pos_++;
        }
    }

    [[noreturn]] void error(const std::string &what) {
        std::string found = pos_ < text_.size() ? "'" + std::string(1, text_[pos_]) + "'" : "end of input";
        fail(ErrorCode::SyntaxError, "at byte " + std::to_string(pos_) + ": " + what + ", found " + found);
    }

    std::string_view text_;
    Int d_;
    std::size_t n_;
    std::size_t pos_ = 0;
};

}  // namespace detail

inline ObservableExpr parse_observable_expr(std::string_view text, Int d, std::size_t n) {
    PhaseSpace space(d, n);
    return detail::ExprScanner(text, space.d(), space.n()).parse();
}

inline Observable to_observable(const ObservableExpr &expr, Int d, std::size_t n) {
    ModVector sigma(d, 2 * n);
    for (const auto &t : expr.terms) {
        std::size_t slot = 2 * (t.index - 1) + (t.variable == 'P' ? 1 : 0);
        sigma.set(slot, sigma[slot] + t.coefficient);
    }
    if (sigma.is_zero()) {
        fail(ErrorCode::ZeroObservable, "'" + expr.source + "' is the zero observable mod " + std::to_string(d));
    }
    return Observable(sigma);
}

inline Observable parse_observable(std::string_view text, Int d, std::size_t n) {
    return to_observable(parse_observable_expr(text, d, n), d, n);
}

/// Canonical text: terms in slot order, coefficient 1 omitted, indices only
/// when there is more than one system.
inline std::string format_observable(const Observable &obs) {
    const ModVector &s = obs.sigma();
    std::size_t n = s.size() / 2;
    std::string out;
    for (std::size_t k = 0; k < s.size(); k++) {
        if (s[k] == 0) {
            continue;
        }
        if (!out.empty()) {
            out += "+";
        }
        if (s[k] != 1) {
            out += std::to_string(s[k]);
        }
        out += k % 2 == 0 ? "X" : "P";
        if (n > 1) {
            out += std::to_string(k / 2 + 1);
        }
    }
    return out.empty() ? "0" : out;
}

}  // namespace spekkens
