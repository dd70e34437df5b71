// Copyright 2026 The polystar Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <tuple>

#include "polystar/shuffle.hpp"

namespace polystar {

/// Basis element w ⧢ (a0·x0)* ⧢ (a1·x1)*. (a0, a1) = (0, 0) is the plain word.
struct StarTerm {
    Word w;
    Rational a0;
    Rational a1;

    friend bool operator==(const StarTerm& a, const StarTerm& b) {
        return a.w == b.w && a.a0 == b.a0 && a.a1 == b.a1;
    }
    friend bool operator<(const StarTerm& a, const StarTerm& b) {
        if (a.w != b.w) return a.w < b.w;
        if (a.a0 != b.a0) return a.a0 < b.a0;
        return a.a1 < b.a1;
    }
    bool is_polynomial() const { return sgn(a0) == 0 && sgn(a1) == 0; }
};

/// Element of C<X> ⧢ C^rat<<x0>> ⧢ C^rat<<x1>> on the basis of StarTerm.
using StarSeries = Linear<StarTerm>;

inline StarSeries embed(const NCPoly& p) {
    StarSeries s;
    for (const auto& [w, c] : p) s.add(StarTerm{w, 0, 0}, c);
    return s;
}

inline StarSeries star_constant(const Rational& c) { return StarSeries(StarTerm{Word{}, 0, 0}, c); }

/// (a0·x0 + a1·x1)* = (a0·x0)* ⧢ (a1·x1)*.
inline StarSeries plane_star(const Rational& a0, const Rational& a1) {
    return StarSeries(StarTerm{Word{}, a0, a1}, 1);
}

/// True iff every term has (a0, a1) = (0, 0).
inline bool is_polynomial(const StarSeries& s) {
    for (const auto& [t, c] : s)
        if (!t.is_polynomial()) return false;
    return true;
}

/// The polynomial part of a series whose terms are all plain words.
inline NCPoly polynomial_part(const StarSeries& s) {
    NCPoly p;
    for (const auto& [t, c] : s) {
        if (!t.is_polynomial()) throw DomainError("series has star factors");
        p.add(t.w, c);
    }
    return p;
}

/// Kleene star of a plane element a0·x0 + a1·x1.
inline StarSeries star(const StarSeries& s) {
    Rational a0 = 0, a1 = 0;
    for (const auto& [t, c] : s) {
        if (!t.is_polynomial()) throw DomainError("star not representable in this algebra");
        if (t.w.empty()) throw DomainError("star undefined: nonzero constant term");
        if (t.w.size() != 1) throw DomainError("star not representable in this algebra");
        (t.w.front() == Letter::x0 ? a0 : a1) += c;
    }
    return plane_star(a0, a1);
}

/// Shuffle product: words shuffle, star parameters add.
inline StarSeries shuffle_star(const StarSeries& s, const StarSeries& t) {
    StarSeries r;
    for (const auto& [u, a] : s)
        for (const auto& [v, b] : t) {
            const Rational ab = a * b;
            const Rational c0 = u.a0 + v.a0, c1 = u.a1 + v.a1;
            for (const auto& [w, n] : *shuffle_words(u.w, v.w)) r.add(StarTerm{w, c0, c1}, ab * static_cast<unsigned long>(n));
        }
    return r;
}

inline StarSeries shuffle_power(const StarSeries& s, unsigned n) {
    StarSeries r = star_constant(1);
    for (unsigned i = 0; i < n; ++i) r = shuffle_star(r, s);
    return r;
}

/// Left shift δ^l_x, ⟨δ^l_x S | w⟩ = ⟨S | x w⟩. A shuffle derivation; on a
/// basis term it strips a leading x from the word and scales by the star
/// parameter of x.
inline StarSeries delta_left(Letter x, const StarSeries& s) {
    StarSeries r;
    for (const auto& [t, c] : s) {
        if (!t.w.empty() && t.w.front() == x) r.add(StarTerm{t.w.suffix_from(1), t.a0, t.a1}, c);
        const Rational& alpha = x == Letter::x0 ? t.a0 : t.a1;
        if (sgn(alpha) != 0) r.add(t, c * alpha);
    }
    return r;
}

/// Every coefficient of s on words of length <= n, computed from
/// ⟨(a0x0)* ⧢ (a1x1)* | v⟩ = a0^{|v|_x0} a1^{|v|_x1}.
inline NCPoly expand(const StarSeries& s, std::size_t n) {
    NCPoly r;
    for (const auto& [t, c] : s) {
        if (t.w.size() > n) continue;
        const std::size_t budget = n - t.w.size();
        const bool trivial = t.is_polynomial();
        // Enumerate the star-part words v with |v| <= budget.
        for (std::size_t len = 0; len <= (trivial ? 0 : budget); ++len) {
            const std::uint64_t count = len == 64 ? 0 : (std::uint64_t{1} << len);
            for (std::uint64_t code = 0; code < count; ++code) {
                Word v;
                for (std::size_t i = 0; i < len; ++i)
                    v.push_back(((code >> (len - 1 - i)) & 1u) ? Letter::x1 : Letter::x0);
                Rational coeff = c * pow(t.a0, static_cast<unsigned>(v.zeros())) * pow(t.a1, static_cast<unsigned>(v.ones()));
                if (sgn(coeff) == 0) continue;
                for (const auto& [w, m] : *shuffle_words(t.w, v)) r.add(w, coeff * static_cast<unsigned long>(m));
            }
        }
    }
    return r;
}

} // namespace polystar
