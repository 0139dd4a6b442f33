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


// Text rendering of phase-space functions. One system: a grid with p rows
// descending and x columns ascending, zero cells shown as a middle dot.
// More systems: one line per nonzero point.

#pragma once

#include <sstream>
#include <string>
#include <vector>

#include "spekkens/phase_space.h"

namespace spekkens {

inline constexpr const char *kZeroCell = "·";

namespace detail {

/// Display width; the middle dot is one column wide.
inline std::size_t text_width(const std::string &s) {
    std::size_t w = 0;
    for (unsigned char c : s) {
        w += (c & 0xC0) != 0x80;
    }
    return w;
}

inline std::string pad(const std::string &s, std::size_t width) {
    return s + std::string(width - std::min(width, text_width(s)), ' ');
}

inline std::string rstrip(std::string s) {
    while (!s.empty() && s.back() == ' ') {
        s.pop_back();
    }
    return s;
}

}  // namespace detail

/// Cells joined by two spaces, every column as wide as the widest cell.
inline std::string render_table(const std::vector<std::vector<std::string>> &rows) {
    std::size_t width = 0;
    for (const auto &row : rows) {
        for (const auto &cell : row) {
            width = std::max(width, detail::text_width(cell));
        }
    }
    std::string out;
    for (const auto &row : rows) {
        std::string line;
        for (std::size_t k = 0; k < row.size(); k++) {
            line += (k ? "  " : "") + detail::pad(row[k], width);
        }
        out += detail::rstrip(line) + "\n";
    }
    return out;
}

inline std::string cell_text(const Rational &r) {
    return r.numerator() == 0 ? kZeroCell : to_string(r);
}

template <typename Tag>
std::string render_grid(const PhaseFunction<Tag> &f) {
    const PhaseSpace &space = f.space();
    if (space.n() != 1) {
        std::string out;
        for (Int k = 0; k < space.num_points(); k++) {
            if (f.at(k).numerator() != 0) {
                out += space.point(k).str() + "  " + to_string(f.at(k)) + "\n";
            }
        }
        return out;
    }
    Int d = space.d();
    std::vector<std::vector<std::string>> rows;
    std::vector<std::string> header{"p\\x"};
    for (Int x = 0; x < d; x++) {
        header.push_back(std::to_string(x));
    }
    rows.push_back(header);
    for (Int p = d - 1; p >= 0; p--) {
        std::vector<std::string> row{std::to_string(p)};
        for (Int x = 0; x < d; x++) {
            row.push_back(cell_text(f(ModVector(d, {x, p}))));
        }
        rows.push_back(std::move(row));
    }
    return render_table(rows);
}

}  // namespace spekkens
