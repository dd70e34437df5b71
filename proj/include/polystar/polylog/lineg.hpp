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

#include <string>
#include <string_view>
#include <vector>

#include "polystar/polylog/symfun.hpp"
#include "polystar/rewrite.hpp"

namespace polystar {

/// Polynomial Σ_j c_j (1−z)^{−j}; coeffs[j] = c_j, no trailing zeros.
struct DenPoly {
    std::vector<Rational> coeffs;

    void trim() {
        while (!coeffs.empty() && sgn(coeffs.back()) == 0) coeffs.pop_back();
    }
    std::size_t degree() const { return coeffs.empty() ? 0 : coeffs.size() - 1; }
    Rational at(std::size_t j) const { return j < coeffs.size() ? coeffs[j] : Rational(0); }

    /// Value at z = 0, where (1−z)^{−j} = 1.
    Rational value_at_zero() const {
        Rational s = 0;
        for (const auto& c : coeffs) s += c;
        return s;
    }

    /// [z^N] Σ c_j (1−z)^{−j}, using [z^N](1−z)^{−j} = C(N+j−1, j−1).
    Rational taylor_coefficient(std::uint64_t N) const {
        Rational s = N == 0 ? at(0) : Rational(0);
        for (std::size_t j = 1; j < coeffs.size(); ++j)
            if (sgn(coeffs[j]) != 0)
                s += coeffs[j] * Rational(binomial(static_cast<long>(N + j - 1), static_cast<long>(j - 1)));
        return s;
    }

    Complex evaluate(const Complex& z) const {
        const Complex u = 1.0 / (1.0 - z);
        Complex acc = 0.0;
        for (std::size_t j = coeffs.size(); j-- > 0;) acc = acc * u + coeffs[j].get_d();
        return acc;
    }

    SymFun to_symfun() const {
        SymFun f;
        for (std::size_t j = 0; j < coeffs.size(); ++j) f.add(SymKey{0, static_cast<long>(j), Word{}}, coeffs[j]);
        return f;
    }

    /// "−1 + (1−z)^-1" style rendering with ASCII minus.
    std::string str() const {
        if (coeffs.empty()) return "0";
        std::string out;
        for (std::size_t j = 0; j < coeffs.size(); ++j) {
            const Rational& c = coeffs[j];
            if (sgn(c) == 0) continue;
            const bool neg = sgn(c) < 0;
            const Rational mag = neg ? Rational(-c) : c;
            if (out.empty()) out += neg ? "-" : "";
            else out += neg ? " - " : " + ";
            if (j == 0) {
                out += mag.get_str();
            } else {
                if (mag != 1) out += mag.get_str() + "*";
                out += "(1-z)^-" + std::to_string(j);
            }
        }
        return out;
    }

    friend bool operator==(const DenPoly& a, const DenPoly& b) { return a.coeffs == b.coeffs; }
};

/// Reads a SymFun lying in Q[1/(1−z)].
inline DenPoly den_poly_from(const SymFun& f) {
    DenPoly p;
    for (const auto& [key, c] : f) {
        if (!key.w.empty() || key.k != 0)
            throw DomainError("function is not a polynomial in 1/(1-z)");
        const auto j = static_cast<std::size_t>(key.l);
        if (p.coeffs.size() <= j) p.coeffs.resize(j + 1, 0);
        p.coeffs[j] += c;
    }
    p.trim();
    return p;
}

/// Reads a normal form (modulo the kernel ideal) lying in Q[x1*].
inline DenPoly den_poly_from(const StarSeries& s) {
    DenPoly p;
    for (const auto& [t, c] : normal_form(s)) {
        if (!t.w.empty() || sgn(t.a0) != 0 || !is_integer(t.a1))
            throw DomainError("series is not a polynomial in x1*");
        const auto j = static_cast<std::size_t>(t.a1.get_num().get_ui());
        if (p.coeffs.size() <= j) p.coeffs.resize(j + 1, 0);
        p.coeffs[j] += c;
    }
    p.trim();
    return p;
}

enum class NegRoute { T, R, F, recursion };

inline NegRoute parse_neg_route(std::string_view s) {
    if (s == "T") return NegRoute::T;
    if (s == "R") return NegRoute::R;
    if (s == "F") return NegRoute::F;
    if (s == "rec" || s == "recursion") return NegRoute::recursion;
    throw DomainError("unknown route '" + std::string(s) + "' (expected T, R, F or rec)");
}

inline std::string_view route_name(NegRoute r) {
    switch (r) {
    case NegRoute::T: return "T";
    case NegRoute::R: return "R";
    case NegRoute::F: return "F";
    case NegRoute::recursion: return "rec";
    }
    return "?";
}

namespace detail {

/// The series whose image is λ: (x0+x1)* for T, x0*⧢x1* for R, x1*−1 for F.
/// The first two coincide as elements of the star algebra.
inline StarSeries lambda_series(NegRoute route) {
    if (route == NegRoute::F) {
        StarSeries s = plane_star(0, 1);
        s -= star_constant(1);
        return s;
    }
    return plane_star(1, 1);
}

/// Series for θ0^k λ: λ itself for k = 0, else x1* ⧢ Σ_j S2(k,j) j! λ^{⧢j}.
inline StarSeries theta_lambda_series(NegRoute route, unsigned k) {
    const StarSeries lam = lambda_series(route);
    if (k == 0) return lam;
    StarSeries sum;
    for (unsigned j = 1; j <= k; ++j)
        sum.add_scaled(shuffle_power(lam, j), Rational(stirling2(k, j) * factorial(j)));
    return shuffle_star(plane_star(0, 1), sum);
}

} // namespace detail

/// Σ over k_1..k_{r−1} of Π C(S_i − K_{i−1}, k_i) · T_{k_1} ⧢ ... ⧢ T_{k_r}, with
/// S_i = s_1+...+s_i, K_i = k_1+...+k_i and the last index fixed to
/// k_r = S_r − K_{r−1}. This is the iterated Leibniz expansion of the
/// recursion Li^-_{y_s u} = θ0^s(λ·Li^-_u).
inline StarSeries build_neg_series(const Composition& s, NegRoute route) {
    if (route == NegRoute::recursion) throw DomainError("build_neg_series needs route T, R or F");
    const auto& parts = s.parts();
    const std::size_t r = parts.size();
    if (r == 0) return star_constant(1);
    std::vector<StarSeries> factors;
    std::uint64_t weight = s.weight();
    for (std::uint64_t k = 0; k <= weight; ++k)
        factors.push_back(detail::theta_lambda_series(route, static_cast<unsigned>(k)));

    StarSeries out;
    // budget = S_i − K_{i−1} before choosing k_i.
    auto rec = [&](auto&& self, std::size_t i, std::uint64_t budget, const Rational& coeff, const StarSeries& acc) -> void {
        if (i + 1 == r) {
            out.add_scaled(shuffle_star(acc, factors[budget]), coeff);
            return;
        }
        for (std::uint64_t k = 0; k <= budget; ++k) {
            const Rational c = coeff * Rational(binomial(static_cast<long>(budget), static_cast<long>(k)));
            self(self, i + 1, budget - k + parts[i + 1], c, shuffle_star(acc, factors[k]));
        }
    };
    rec(rec, 0, parts[0], Rational(1), star_constant(1));
    return out;
}

/// Li^-_s via Li^-_{y_{s1} u} = θ0^{s1}(λ·Li^-_u), Li^-_ε = 1.
inline SymFun li_neg_recursion(const Composition& s) {
    const auto& parts = s.parts();
    SymFun f = sym_one();
    const SymFun lam = sym_lambda();
    for (std::size_t i = parts.size(); i-- > 0;) {
        f = product(lam, f);
        for (std::uint32_t j = 0; j < parts[i]; ++j) f = theta(Letter::x0, f);
    }
    return f;
}

/// Li^-_s through the operator word θ0^{t1+1}ι1 ... θ0^{tr+1}ι1 applied to 1.
/// Throws DomainError if an intermediate ι leaves the supported domain.
inline SymFun li_neg_operators(const Composition& s) {
    return apply_operators(neg_index_operator_word(s), sym_one());
}

/// Closed form of Li^-_s in Q[1/(1−z)], normalized to vanish at z = 0.
inline DenPoly li_neg_closed_form(const Composition& s, NegRoute route) {
    DenPoly p = route == NegRoute::recursion ? den_poly_from(li_neg_recursion(s))
                                             : den_poly_from(build_neg_series(s, route));
    if (!s.parts().empty()) {
        const Rational c0 = p.value_at_zero();
        if (sgn(c0) != 0) {
            if (p.coeffs.empty()) p.coeffs.resize(1, 0);
            p.coeffs[0] -= c0;
            p.trim();
        }
    }
    return p;
}

} // namespace polystar
