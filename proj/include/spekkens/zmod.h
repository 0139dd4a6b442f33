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

// Exact linear algebra over the residue ring Z_d, for any d >= 2.
//
// Spans are stored in Howell normal form, the unique canonical generator
// matrix of a submodule of Z_d^m. Unlike row echelon form it stays unique
// when d has zero divisors, so submodule equality is row-by-row comparison.

#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include "spekkens/error.h"

namespace spekkens {

using Int = std::int64_t;

inline constexpr std::size_t kDefaultEnumerationGuard = 1'000'000;

constexpr Int reduce_mod(Int a, Int d) {
    Int r = a % d;
    return r < 0 ? r + d : r;
}

struct ExtendedGcd {
    Int g;
    Int s;
    Int t;
};

/// s*a + t*b = g with g = gcd(a, b) >= 0.
constexpr ExtendedGcd extended_gcd(Int a, Int b) {
    Int old_r = a, r = b;
    Int old_s = 1, s = 0;
    Int old_t = 0, t = 1;
    while (r != 0) {
        Int q = old_r / r;
        Int tmp = old_r - q * r;
        old_r = r;
        r = tmp;
        tmp = old_s - q * s;
        old_s = s;
        s = tmp;
        tmp = old_t - q * t;
        old_t = t;
        t = tmp;
    }
    if (old_r < 0) {
        return {-old_r, -old_s, -old_t};
    }
    return {old_r, old_s, old_t};
}

inline std::optional<Int> inverse_mod(Int a, Int d) {
    auto e = extended_gcd(reduce_mod(a, d), d);
    if (e.g != 1) {
        return std::nullopt;
    }
    return reduce_mod(e.s, d);
}

/// An element of Z_d.
class Residue {
   public:
    Residue(Int value, Int modulus) : value_(reduce_mod(value, modulus)), modulus_(modulus) {
    }

    Int value() const {
        return value_;
    }
    Int modulus() const {
        return modulus_;
    }

    friend Residue operator+(Residue a, Residue b) {
        check_same(a, b);
        return {a.value_ + b.value_, a.modulus_};
    }
    friend Residue operator-(Residue a, Residue b) {
        check_same(a, b);
        return {a.value_ - b.value_, a.modulus_};
    }
    friend Residue operator*(Residue a, Residue b) {
        check_same(a, b);
        return {a.value_ * b.value_, a.modulus_};
    }
    friend bool operator==(const Residue &, const Residue &) = default;

    friend std::ostream &operator<<(std::ostream &out, const Residue &r) {
        return out << r.value_;
    }

   private:
    static void check_same(const Residue &a, const Residue &b) {
        if (a.modulus_ != b.modulus_) {
            fail(ErrorCode::MixedModulus, "residues over different moduli");
        }
    }

    Int value_;
    Int modulus_;
};

/// A fixed-length vector over Z_d. Entries are always reduced into [0, d).
class ModVector {
   public:
    ModVector() = default;

    ModVector(Int modulus, std::size_t length) : modulus_(modulus), entries_(length, 0) {
        check_modulus();
    }

    ModVector(Int modulus, std::vector<Int> entries) : modulus_(modulus), entries_(std::move(entries)) {
        check_modulus();
        for (auto &e : entries_) {
            e = reduce_mod(e, modulus_);
        }
    }

    ModVector(Int modulus, std::initializer_list<Int> entries) : ModVector(modulus, std::vector<Int>(entries)) {
    }

    static ModVector unit(Int modulus, std::size_t length, std::size_t k) {
        ModVector v(modulus, length);
        v.entries_[k] = 1;
        return v;
    }

    Int modulus() const {
        return modulus_;
    }
    std::size_t size() const {
        return entries_.size();
    }
    Int operator[](std::size_t k) const {
        return entries_[k];
    }
    void set(std::size_t k, Int value) {
        entries_[k] = reduce_mod(value, modulus_);
    }
    const std::vector<Int> &entries() const {
        return entries_;
    }

    bool is_zero() const {
        return std::all_of(entries_.begin(), entries_.end(), [](Int e) { return e == 0; });
    }

    /// Index of the first nonzero entry, or size() for the zero vector.
    std::size_t leading_index() const {
        auto it = std::find_if(entries_.begin(), entries_.end(), [](Int e) { return e != 0; });
        return static_cast<std::size_t>(it - entries_.begin());
    }

    ModVector &operator+=(const ModVector &other) {
        check_compatible(other);
        for (std::size_t k = 0; k < entries_.size(); k++) {
            entries_[k] = reduce_mod(entries_[k] + other.entries_[k], modulus_);
        }
        return *this;
    }
    ModVector &operator-=(const ModVector &other) {
        check_compatible(other);
        for (std::size_t k = 0; k < entries_.size(); k++) {
            entries_[k] = reduce_mod(entries_[k] - other.entries_[k], modulus_);
        }
        return *this;
    }
    ModVector &operator*=(Int scalar) {
        for (auto &e : entries_) {
            e = reduce_mod(e * reduce_mod(scalar, modulus_), modulus_);
        }
        return *this;
    }

    friend ModVector operator+(ModVector a, const ModVector &b) {
        return a += b;
    }
    friend ModVector operator-(ModVector a, const ModVector &b) {
        return a -= b;
    }
    friend ModVector operator-(ModVector a) {
        return a *= -1;
    }
    friend ModVector operator*(Int scalar, ModVector v) {
        return v *= scalar;
    }

    /// Euclidean pairing a^T b mod d.
    Int dot(const ModVector &other) const {
        check_compatible(other);
        Int acc = 0;
        for (std::size_t k = 0; k < entries_.size(); k++) {
            acc = reduce_mod(acc + entries_[k] * other.entries_[k], modulus_);
        }
        return acc;
    }

    friend bool operator==(const ModVector &, const ModVector &) = default;
    friend auto operator<=>(const ModVector &a, const ModVector &b) {
        if (auto c = a.modulus_ <=> b.modulus_; c != 0) {
            return c;
        }
        return a.entries_ <=> b.entries_;
    }

    std::string str() const {
        std::string out = "(";
        for (std::size_t k = 0; k < entries_.size(); k++) {
            if (k) {
                out += ",";
            }
            out += std::to_string(entries_[k]);
        }
        return out + ")";
    }

    friend std::ostream &operator<<(std::ostream &out, const ModVector &v) {
        return out << v.str();
    }

    void check_compatible(const ModVector &other) const {
        if (modulus_ != other.modulus_) {
            fail(ErrorCode::MixedModulus, "vectors over Z_" + std::to_string(modulus_) + " and Z_" +
                                              std::to_string(other.modulus_));
        }
        if (entries_.size() != other.entries_.size()) {
            fail(ErrorCode::DimensionMismatch,
                 "vector lengths " + std::to_string(entries_.size()) + " and " + std::to_string(other.entries_.size()));
        }
    }

   private:
    void check_modulus() const {
        if (modulus_ < 2) {
            fail(ErrorCode::MixedModulus, "modulus must be at least 2, got " + std::to_string(modulus_));
        }
    }

    Int modulus_ = 2;
    std::vector<Int> entries_;
};

/// Symplectic pairing a^T J b with J the block sum of [[0,1],[-1,0]] over
/// coordinate pairs (x_k, p_k).
inline Int symplectic_form(const ModVector &a, const ModVector &b) {
    a.check_compatible(b);
    if (a.size() % 2 != 0) {
        fail(ErrorCode::DimensionMismatch, "symplectic form needs even length");
    }
    Int d = a.modulus();
    Int acc = 0;
    for (std::size_t k = 0; k < a.size(); k += 2) {
        acc = reduce_mod(acc + a[k] * b[k + 1] - a[k + 1] * b[k], d);
    }
    return acc;
}

/// J v. On each pair, (a, b) -> (b, -a).
inline ModVector apply_symplectic(const ModVector &v) {
    if (v.size() % 2 != 0) {
        fail(ErrorCode::DimensionMismatch, "symplectic map needs even length");
    }
    std::vector<Int> out(v.size());
    for (std::size_t k = 0; k < v.size(); k += 2) {
        out[k] = v[k + 1];
        out[k + 1] = -v[k];
    }
    return {v.modulus(), std::move(out)};
}

/// J^{-1} v = -J v. On each pair, (a, b) -> (-b, a).
inline ModVector apply_symplectic_inverse(const ModVector &v) {
    return -apply_symplectic(v);
}

class Submodule;
Submodule howell_form(Int modulus, std::size_t length, std::span<const ModVector> rows);

/// A submodule of Z_d^m held as its Howell normal form.
class Submodule {
   public:
    /// The zero submodule.
    Submodule(Int modulus, std::size_t length) : modulus_(modulus), length_(length) {
        if (modulus < 2) {
            fail(ErrorCode::MixedModulus, "modulus must be at least 2");
        }
    }

    static Submodule whole(Int modulus, std::size_t length) {
        std::vector<ModVector> rows;
        for (std::size_t k = 0; k < length; k++) {
            rows.push_back(ModVector::unit(modulus, length, k));
        }
        return howell_form(modulus, length, rows);
    }

    Int modulus() const {
        return modulus_;
    }
    std::size_t ambient() const {
        return length_;
    }
    const std::vector<ModVector> &rows() const {
        return rows_;
    }
    bool is_zero() const {
        return rows_.empty();
    }

    /// |S| = prod over rows of d / pivot.
    Int size() const {
        Int total = 1;
        for (const auto &row : rows_) {
            total *= modulus_ / row[row.leading_index()];
        }
        return total;
    }

    /// Lexicographically least element of the coset v + S.
    ModVector reduce(ModVector v) const {
        check_vector(v);
        for (const auto &row : rows_) {
            std::size_t c = row.leading_index();
            Int q = v[c] / row[c];
            if (q != 0) {
                v -= q * row;
            }
        }
        return v;
    }

    bool contains(const ModVector &v) const {
        return reduce(v).is_zero();
    }

    bool contains(const Submodule &other) const {
        return std::all_of(other.rows_.begin(), other.rows_.end(), [&](const ModVector &r) { return contains(r); });
    }

    friend bool operator==(const Submodule &, const Submodule &) = default;

    std::string str() const {
        std::string out = "span{";
        for (std::size_t k = 0; k < rows_.size(); k++) {
            if (k) {
                out += ",";
            }
            out += rows_[k].str();
        }
        return out + "}";
    }

    friend std::ostream &operator<<(std::ostream &out, const Submodule &s) {
        return out << s.str();
    }

    void check_vector(const ModVector &v) const {
        if (v.modulus() != modulus_) {
            fail(ErrorCode::MixedModulus, "vector modulus does not match submodule");
        }
        if (v.size() != length_) {
            fail(ErrorCode::DimensionMismatch, "vector length does not match submodule ambient");
        }
    }

    void check_same_ambient(const Submodule &other) const {
        if (other.modulus_ != modulus_) {
            fail(ErrorCode::MixedModulus, "submodules over different moduli");
        }
        if (other.length_ != length_) {
            fail(ErrorCode::DimensionMismatch, "submodules of different ambient length");
        }
    }

   private:
    friend Submodule howell_form(Int, std::size_t, std::span<const ModVector>);

    Int modulus_;
    std::size_t length_;
    std::vector<ModVector> rows_;
};

namespace detail {

using Row = std::vector<Int>;

/// A unit u of Z_d with u * p = gcd(p, d) mod d.
inline Int normalizing_unit(Int p, Int d) {
    Int g = std::gcd(p, d);
    for (Int u = 1; u < d; u++) {
        if (std::gcd(u, d) == 1 && reduce_mod(u * p, d) == g) {
            return u;
        }
    }
    fail(ErrorCode::MixedModulus, "no normalizing unit (unreachable)");
}

/// In-place Howell reduction of a dense row list. Returns the nonzero rows.
inline std::vector<Row> howell_rows(Int d, std::size_t width, std::vector<Row> work) {
    std::size_t r = 0;
    for (std::size_t c = 0; c < width && r < work.size(); c++) {
        auto it = std::find_if(work.begin() + static_cast<std::ptrdiff_t>(r), work.end(),
                               [c](const Row &row) { return row[c] != 0; });
        if (it == work.end()) {
            continue;
        }
        std::swap(work[r], *it);

        // Fold every lower row into the pivot with a unimodular 2x2 step.
        for (std::size_t i = r + 1; i < work.size(); i++) {
            if (work[i][c] == 0) {
                continue;
            }
            Int a = work[r][c];
            Int b = work[i][c];
            auto e = extended_gcd(a, b);
            Int u = -b / e.g;
            Int v = a / e.g;
            for (std::size_t k = c; k < width; k++) {
                Int x = work[r][k];
                Int y = work[i][k];
                work[r][k] = reduce_mod(e.s * x + e.t * y, d);
                work[i][k] = reduce_mod(u * x + v * y, d);
            }
        }

        Int p = work[r][c];
        Int g = std::gcd(p, d);
        if (p != g) {
            Int unit = normalizing_unit(p, d);
            for (std::size_t k = c; k < width; k++) {
                work[r][k] = reduce_mod(work[r][k] * unit, d);
            }
        }

        for (std::size_t k = 0; k < r; k++) {
            Int q = work[k][c] / g;
            if (q != 0) {
                for (std::size_t j = c; j < width; j++) {
                    work[k][j] = reduce_mod(work[k][j] - q * work[r][j], d);
                }
            }
        }

        // (d/g) * pivot row vanishes at column c; it must stay in the span of
        // the rows below for the Howell property to hold.
        if (g != 1) {
            Row ann(width, 0);
            bool nonzero = false;
            for (std::size_t k = c; k < width; k++) {
                ann[k] = reduce_mod((d / g) * work[r][k], d);
                nonzero = nonzero || ann[k] != 0;
            }
            if (nonzero) {
                work.push_back(std::move(ann));
            }
        }
        r++;
    }
    work.resize(r);
    return work;
}

}  // namespace detail

/// Canonical generator matrix of span(rows) in Z_d^length. Idempotent.
inline Submodule howell_form(Int modulus, std::size_t length, std::span<const ModVector> rows) {
    Submodule out(modulus, length);
    std::vector<detail::Row> work;
    for (const auto &row : rows) {
        if (row.modulus() != modulus) {
            fail(ErrorCode::MixedModulus, "row " + row.str() + " is not over Z_" + std::to_string(modulus));
        }
        if (row.size() != length) {
            fail(ErrorCode::MixedModulus, "row " + row.str() + " does not have length " + std::to_string(length));
        }
        if (!row.is_zero()) {
            work.push_back(row.entries());
        }
    }
    for (auto &row : detail::howell_rows(modulus, length, std::move(work))) {
        out.rows_.emplace_back(modulus, std::move(row));
    }
    return out;
}

/// Overload that infers d and m from the rows. Requires at least one row.
inline Submodule howell_form(std::span<const ModVector> rows) {
    if (rows.empty()) {
        fail(ErrorCode::DimensionMismatch, "cannot infer modulus and length from an empty row list");
    }
    return howell_form(rows.front().modulus(), rows.front().size(), rows);
}

inline Submodule span_of(Int modulus, std::size_t length, std::initializer_list<ModVector> rows) {
    std::vector<ModVector> v(rows);
    return howell_form(modulus, length, v);
}

struct LinearSolution {
    ModVector particular;
    Submodule kernel;
};

/// Solves matrix * x = rhs over Z_d, where each matrix row is one equation
/// in `unknowns` variables. Returns nullopt when no solution exists.
inline std::optional<LinearSolution> solve_linear(Int modulus, std::size_t unknowns, std::span<const ModVector> matrix,
                                                  const ModVector &rhs) {
    std::size_t k = matrix.size();
    if (rhs.size() != k || (k > 0 && rhs.modulus() != modulus)) {
        fail(ErrorCode::DimensionMismatch, "right-hand side has " + std::to_string(rhs.size()) + " entries for " +
                                               std::to_string(k) + " equations");
    }
    for (const auto &row : matrix) {
        if (row.size() != unknowns) {
            fail(ErrorCode::DimensionMismatch, "equation " + row.str() + " does not have " +
                                                   std::to_string(unknowns) + " coefficients");
        }
        if (row.modulus() != modulus) {
            fail(ErrorCode::MixedModulus, "equation " + row.str() + " is not over Z_" + std::to_string(modulus));
        }
    }
    if (k == 0) {
        return LinearSolution{ModVector(modulus, unknowns), Submodule::whole(modulus, unknowns)};
    }

    // Rows (A^T | 0 | I) and (-b | 1 | 0): the span is {(Ax - t b, t, x)}.
    std::size_t width = k + 1 + unknowns;
    std::vector<detail::Row> work;
    for (std::size_t j = 0; j < unknowns; j++) {
        detail::Row row(width, 0);
        for (std::size_t i = 0; i < k; i++) {
            row[i] = matrix[i][j];
        }
        row[k + 1 + j] = 1;
        work.push_back(std::move(row));
    }
    detail::Row last(width, 0);
    for (std::size_t i = 0; i < k; i++) {
        last[i] = reduce_mod(-rhs[i], modulus);
    }
    last[k] = 1;
    work.push_back(std::move(last));

    auto howell = detail::howell_rows(modulus, width, std::move(work));
    std::optional<ModVector> particular;
    std::vector<ModVector> kernel_rows;
    for (const auto &row : howell) {
        std::size_t lead = static_cast<std::size_t>(std::find_if(row.begin(), row.end(), [](Int e) { return e != 0; }) -
                                                    row.begin());
        if (lead < k) {
            continue;
        }
        std::vector<Int> tail(row.begin() + static_cast<std::ptrdiff_t>(k + 1), row.end());
        if (lead == k) {
            if (row[k] != 1) {
                return std::nullopt;
            }
            particular = ModVector(modulus, std::move(tail));
        } else {
            kernel_rows.emplace_back(modulus, std::move(tail));
        }
    }
    if (!particular) {
        return std::nullopt;
    }
    return LinearSolution{*particular, howell_form(modulus, unknowns, kernel_rows)};
}

enum class Pairing { euclidean, symplectic };

/// {a : <a, b> = 0 for all b in S} under the chosen pairing.
inline Submodule complement(const Submodule &s, Pairing pairing) {
    Int d = s.modulus();
    std::size_t m = s.ambient();
    if (s.is_zero()) {
        return Submodule::whole(d, m);
    }
    std::vector<ModVector> gens;
    for (const auto &row : s.rows()) {
        gens.push_back(pairing == Pairing::symplectic ? apply_symplectic(row) : row);
    }

    // Left kernel of G^T via rows (G^T | I).
    std::size_t r = gens.size();
    std::size_t width = r + m;
    std::vector<detail::Row> work;
    for (std::size_t j = 0; j < m; j++) {
        detail::Row row(width, 0);
        for (std::size_t i = 0; i < r; i++) {
            row[i] = gens[i][j];
        }
        row[r + j] = 1;
        work.push_back(std::move(row));
    }
    std::vector<ModVector> tails;
    for (const auto &row : detail::howell_rows(d, width, std::move(work))) {
        if (std::all_of(row.begin(), row.begin() + static_cast<std::ptrdiff_t>(r), [](Int e) { return e == 0; })) {
            tails.emplace_back(d, std::vector<Int>(row.begin() + static_cast<std::ptrdiff_t>(r), row.end()));
        }
    }
    return howell_form(d, m, tails);
}

inline Submodule direct_sum(const Submodule &a, const Submodule &b) {
    a.check_same_ambient(b);
    std::vector<ModVector> rows = a.rows();
    rows.insert(rows.end(), b.rows().begin(), b.rows().end());
    return howell_form(a.modulus(), a.ambient(), rows);
}

/// A ∩ B = (A⊥ + B⊥)⊥, using the double-annihilator property of Z_d.
inline Submodule intersect(const Submodule &a, const Submodule &b) {
    a.check_same_ambient(b);
    return complement(direct_sum(complement(a, Pairing::euclidean), complement(b, Pairing::euclidean)),
                      Pairing::euclidean);
}

/// Mixed-radix code of v in [0, d^m). Callers guarantee d^m fits.
inline Int encode(const ModVector &v) {
    Int code = 0;
    for (std::size_t k = v.size(); k-- > 0;) {
        code = code * v.modulus() + v[k];
    }
    return code;
}

inline ModVector decode(Int code, Int modulus, std::size_t length) {
    std::vector<Int> entries(length);
    for (std::size_t k = 0; k < length; k++) {
        entries[k] = code % modulus;
        code /= modulus;
    }
    return {modulus, std::move(entries)};
}

/// Exact element set of S, sorted, computed by closing {0} under addition of
/// the generators. Independent of the Howell size formula.
inline std::vector<ModVector> enumerate_elements(const Submodule &s, std::size_t guard = kDefaultEnumerationGuard) {
    if (static_cast<std::size_t>(s.size()) > guard) {
        fail(ErrorCode::TooLarge, "submodule has " + std::to_string(s.size()) + " elements, guard is " +
                                      std::to_string(guard));
    }
    std::unordered_set<Int> seen;
    std::vector<ModVector> found{ModVector(s.modulus(), s.ambient())};
    seen.insert(0);
    for (std::size_t head = 0; head < found.size(); head++) {
        for (const auto &g : s.rows()) {
            ModVector next = found[head] + g;
            if (seen.insert(encode(next)).second) {
                if (found.size() >= guard) {
                    fail(ErrorCode::TooLarge, "enumeration exceeded guard " + std::to_string(guard));
                }
                found.push_back(std::move(next));
            }
        }
    }
    std::sort(found.begin(), found.end());
    return found;
}

/// Lexicographically least representatives of the cosets of `sub` inside
/// `whole`, sorted. Requires sub to be contained in whole.
inline std::vector<ModVector> coset_representatives(const Submodule &whole, const Submodule &sub,
                                                    std::size_t guard = kDefaultEnumerationGuard) {
    whole.check_same_ambient(sub);
    if (!whole.contains(sub)) {
        fail(ErrorCode::DimensionMismatch, sub.str() + " is not contained in " + whole.str());
    }
    std::vector<ModVector> reps;
    for (const auto &v : enumerate_elements(whole, guard)) {
        reps.push_back(sub.reduce(v));
    }
    std::sort(reps.begin(), reps.end());
    reps.erase(std::unique(reps.begin(), reps.end()), reps.end());
    return reps;
}

}  // namespace spekkens
