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

#include <cstdint>
#include <cstdlib>
#include <map>
#include <random>
#include <set>
#include <tuple>

#include "polystar/star_series.hpp"

namespace polystar {

/// w ⧢ (x0*)^{⧢k} ⧢ (x1*)^{⧢l}, identified with StarTerm(w, k, l).
struct LaurentMonomial {
    Word w;
    long k = 0;
    long l = 0;

    long measure() const noexcept { return std::labs(k) + l; }
    bool is_normal() const noexcept { return k == 0 || l == 0; }

    friend auto operator<=>(const LaurentMonomial&, const LaurentMonomial&) = default;
};

inline bool is_laurent(const StarTerm& t) {
    return is_integer(t.a0) && is_integer(t.a1) && sgn(t.a1) >= 0 && t.a0.get_num().fits_slong_p() &&
           t.a1.get_num().fits_slong_p();
}

inline bool is_laurent(const StarSeries& s) {
    for (const auto& [t, c] : s)
        if (!is_laurent(t)) return false;
    return true;
}

inline LaurentMonomial to_laurent(const StarTerm& t) {
    if (!is_laurent(t))
        throw DomainError("term with star parameters (" + to_string(t.a0) + "," + to_string(t.a1) +
                          ") is outside the Laurent subalgebra");
    return {t.w, t.a0.get_num().get_si(), t.a1.get_num().get_si()};
}

inline StarTerm to_star_term(const LaurentMonomial& m) { return {m.w, Rational(m.k), Rational(m.l)}; }

enum class RewriteStrategy {
    largest_measure_first, ///< deterministic: rewrite the monomial with largest |k|+l
    random                 ///< uniform choice among reducible monomials
};

struct RewriteStats {
    std::uint64_t steps = 0;
};

/// Normal form modulo the ideal generated by x0*⧢x1* − x1* + 1.
///
/// A monomial with k·l ≠ 0 is rewritten by peeling one star factor:
///   (k, l), k >= 1   ->  (k−1, l) − (k−1, l−1)
///   (k, l), k <= −1  ->  (k, l−1) + (k+1, l)
/// Both rules strictly decrease |k| + l, so rewriting terminates. The output
/// has k·l = 0 in every monomial.
inline StarSeries normal_form(const StarSeries& s, RewriteStrategy strategy = RewriteStrategy::largest_measure_first,
                              std::mt19937_64* rng = nullptr, RewriteStats* stats = nullptr) {
    std::map<LaurentMonomial, Rational> normal, pending;
    auto add_to = [](std::map<LaurentMonomial, Rational>& m, const LaurentMonomial& key, const Rational& c) {
        if (sgn(c) == 0) return;
        auto [it, inserted] = m.try_emplace(key, c);
        if (!inserted) {
            it->second += c;
            if (sgn(it->second) == 0) m.erase(it);
        }
    };
    auto add = [&](const LaurentMonomial& key, const Rational& c) {
        add_to(key.is_normal() ? normal : pending, key, c);
    };
    for (const auto& [t, c] : s) add(to_laurent(t), c);

    // Pending monomials ordered by measure for the deterministic strategy.
    auto pick = [&]() -> std::map<LaurentMonomial, Rational>::iterator {
        if (strategy == RewriteStrategy::random && rng) {
            std::uniform_int_distribution<std::size_t> dist(0, pending.size() - 1);
            return std::next(pending.begin(), static_cast<std::ptrdiff_t>(dist(*rng)));
        }
        auto best = pending.begin();
        for (auto it = pending.begin(); it != pending.end(); ++it)
            if (it->first.measure() > best->first.measure()) best = it;
        return best;
    };

    std::uint64_t steps = 0;
    while (!pending.empty()) {
        auto it = pick();
        const LaurentMonomial m = it->first;
        const Rational c = it->second;
        pending.erase(it);
        ++steps;
        if (m.k >= 1) {
            add({m.w, m.k - 1, m.l}, c);
            add({m.w, m.k - 1, m.l - 1}, -c);
        } else {
            add({m.w, m.k, m.l - 1}, c);
            add({m.w, m.k + 1, m.l}, c);
        }
    }
    if (stats) stats->steps += steps;

    StarSeries out;
    for (const auto& [m, c] : normal) out.add(to_star_term(m), c);
    return out;
}

/// Membership in ker(Li^(1)), decided by reducing to the normal form.
inline bool kernel_member(const StarSeries& s) { return normal_form(s).is_zero(); }

/// Upper bound on rewriting steps implied by the decreasing measure: a
/// monomial of measure m spawns a binary tree of depth at most m.
inline std::uint64_t rewrite_step_bound(const StarSeries& s) {
    std::uint64_t bound = 0;
    for (const auto& [t, c] : s) {
        const auto m = to_laurent(t);
        if (!m.is_normal()) bound += (std::uint64_t{1} << m.measure()) - 1;
    }
    return bound;
}

/// The generator x0*⧢x1* − x1* + 1 of the kernel ideal.
inline StarSeries kernel_generator() {
    StarSeries g = plane_star(1, 1);
    g -= plane_star(0, 1);
    g += star_constant(1);
    return g;
}

} // namespace polystar
