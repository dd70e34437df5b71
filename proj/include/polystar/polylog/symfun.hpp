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

#include <cstdlib>
#include <map>
#include <mutex>
#include <span>
#include <tuple>
#include <utility>
#include <vector>

#include "polystar/polylog/numeric.hpp"
#include "polystar/polylog/reduce.hpp"

namespace polystar {

/// Monomial z^k (1−z)^{−l} Li_w. Canonical keys have k = 0 or l = 0 (and
/// l >= 0); together with the linear independence of {Li_w} over
/// C[z, 1/z, 1/(1−z)] this makes the representation unique.
struct SymKey {
    long k = 0;
    long l = 0;
    Word w;

    friend bool operator==(const SymKey&, const SymKey&) = default;
    friend bool operator<(const SymKey& a, const SymKey& b) {
        if (a.w != b.w) return a.w < b.w;
        if (a.k != b.k) return a.k < b.k;
        return a.l < b.l;
    }
};

/// Element of the function algebra C{Li_w} over C[z, 1/z, 1/(1−z)].
using SymFun = Linear<SymKey>;

namespace detail {

using RationalTerms = std::vector<std::pair<std::pair<long, long>, Rational>>;

/// Partial fractions of z^k (1−z)^{−l} (l may be negative) into pure powers
/// z^i and (1−z)^{−j}, j >= 1.
inline const RationalTerms& partial_fractions(long k, long l) {
    static std::mutex mutex;
    static std::map<std::pair<long, long>, RationalTerms> cache;
    {
        std::lock_guard lock(mutex);
        if (auto it = cache.find({k, l}); it != cache.end()) return it->second;
    }
    std::map<std::pair<long, long>, Rational> acc;
    auto add = [&](long kk, long ll, const Rational& c) {
        for (const auto& [key, v] : partial_fractions(kk, ll)) acc[key] += c * v;
    };
    if (l < 0) {
        // (1−z)^m = Σ C(m, j) (−z)^j
        const long m = -l;
        for (long j = 0; j <= m; ++j) {
            Rational c(binomial(m, j));
            if (j % 2) c = -c;
            acc[{k + j, 0}] += c;
        }
    } else if (k == 0 || l == 0) {
        acc[{k, l}] += 1;
    } else if (k > 0) {
        // z = 1 − (1−z)
        add(k - 1, l, 1);
        add(k - 1, l - 1, -1);
    } else {
        // 1/(z(1−z)) = 1/z + 1/(1−z)
        add(k, l - 1, 1);
        add(k + 1, l, 1);
    }
    RationalTerms out;
    for (auto& [key, c] : acc)
        if (sgn(c) != 0) out.emplace_back(key, c);
    std::lock_guard lock(mutex);
    return cache.emplace(std::make_pair(k, l), std::move(out)).first->second;
}

} // namespace detail

/// c · z^k (1−z)^{−l} Li_w, canonicalized.
inline SymFun sym_monomial(long k, long l, const Word& w, const Rational& c = 1) {
    SymFun f;
    for (const auto& [kl, v] : detail::partial_fractions(k, l)) f.add(SymKey{kl.first, kl.second, w}, c * v);
    return f;
}

inline SymFun sym_one() { return SymFun(SymKey{0, 0, Word{}}, 1); }
inline SymFun sym_li(const Word& w) { return SymFun(SymKey{0, 0, w}, 1); }
inline SymFun sym_li(const NCPoly& p) {
    SymFun f;
    for (const auto& [w, c] : p) f.add(SymKey{0, 0, w}, c);
    return f;
}
/// log^n(z)/n! = Li_{x0^n}
inline SymFun sym_log_power(unsigned n) { return sym_li(Word::power(Letter::x0, n)); }
/// λ = z/(1−z)
inline SymFun sym_lambda() { return sym_monomial(1, 1, Word{}); }
/// 1/λ = (1−z)/z
inline SymFun sym_inv_lambda() { return sym_monomial(-1, -1, Word{}); }

/// f · z^k (1−z)^{−l}
inline SymFun mul_rational(const SymFun& f, long k, long l) {
    SymFun r;
    for (const auto& [key, c] : f)
        for (const auto& [kl, v] : detail::partial_fractions(key.k + k, key.l + l))
            r.add(SymKey{kl.first, kl.second, key.w}, c * v);
    return r;
}

/// Pointwise product; Li_u · Li_v = Li_{u ⧢ v}.
inline SymFun product(const SymFun& f, const SymFun& g) {
    SymFun r;
    for (const auto& [a, ca] : f)
        for (const auto& [b, cb] : g) {
            const auto& pf = detail::partial_fractions(a.k + b.k, a.l + b.l);
            const Rational cab = ca * cb;
            for (const auto& [w, n] : *shuffle_words(a.w, b.w)) {
                const Rational cw = cab * static_cast<unsigned long>(n);
                for (const auto& [kl, v] : pf) r.add(SymKey{kl.first, kl.second, w}, cw * v);
            }
        }
    return r;
}

/// d/dz, using d Li_{x0 w} = Li_w dz/z and d Li_{x1 w} = Li_w dz/(1−z).
inline SymFun derivative(const SymFun& f) {
    SymFun r;
    for (const auto& [key, c] : f) {
        if (key.k != 0) r.add_scaled(sym_monomial(key.k - 1, key.l, key.w), c * key.k);
        if (key.l != 0) r.add_scaled(sym_monomial(key.k, key.l + 1, key.w), c * key.l);
        if (!key.w.empty()) {
            const Word rest = key.w.suffix_from(1);
            if (key.w.front() == Letter::x0) r.add_scaled(sym_monomial(key.k - 1, key.l, rest), c);
            else r.add_scaled(sym_monomial(key.k, key.l + 1, rest), c);
        }
    }
    return r;
}

/// θ0 = z d/dz, θ1 = (1−z) d/dz.
inline SymFun theta(Letter x, const SymFun& f) {
    const SymFun d = derivative(f);
    return x == Letter::x0 ? mul_rational(d, 1, 0) : mul_rational(d, 0, -1);
}

namespace detail {

inline SymFun antiderivative_monomial(long k, long l, const Word& w);

inline SymFun antiderivative_sum(const SymFun& f) {
    SymFun r;
    for (const auto& [key, c] : f) r.add_scaled(antiderivative_monomial(key.k, key.l, key.w), c);
    return r;
}

/// A primitive of the canonical monomial z^k (1−z)^{−l} Li_w, obtained by
/// integration by parts; every recursive call shortens the word.
inline SymFun antiderivative_monomial(long k, long l, const Word& w) {
    static std::mutex mutex;
    static std::map<SymKey, SymFun> cache;
    const SymKey key{k, l, w};
    {
        std::lock_guard lock(mutex);
        if (auto it = cache.find(key); it != cache.end()) return it->second;
    }
    SymFun r;
    if (l == 0) {
        if (k == -1) {
            r = sym_li(w.prepended(Letter::x0));
        } else {
            const Rational inv(1, k + 1 > 0 ? k + 1 : -(k + 1));
            const Rational c = k + 1 > 0 ? inv : -inv;
            r = sym_monomial(k + 1, 0, w, c);
            if (!w.empty()) {
                const Word rest = w.suffix_from(1);
                if (w.front() == Letter::x0) r.add_scaled(antiderivative_monomial(k, 0, rest), -c);
                else r.add_scaled(antiderivative_sum(sym_monomial(k + 1, 1, rest)), -c);
            }
        }
    } else {
        if (l == 1) {
            r = sym_li(w.prepended(Letter::x1));
        } else {
            const Rational c(1, l - 1);
            r = sym_monomial(0, l - 1, w, c);
            if (!w.empty()) {
                const Word rest = w.suffix_from(1);
                if (w.front() == Letter::x1) r.add_scaled(antiderivative_monomial(0, l, rest), -c);
                else r.add_scaled(antiderivative_sum(sym_monomial(-1, l - 1, rest)), -c);
            }
        }
    }
    std::lock_guard lock(mutex);
    cache.emplace(key, r);
    return r;
}

} // namespace detail

/// Some G with G' = f (no normalization of the constant).
inline SymFun antiderivative(const SymFun& f) { return detail::antiderivative_sum(f); }

/// Basis element z^k (1−z)^{−l} Li_u log^n(z), u ∈ X*x1 ∪ {ε}.
struct ReducedMonomial {
    long k = 0;
    long l = 0;
    Word u;
    unsigned n = 0;

    friend bool operator==(const ReducedMonomial&, const ReducedMonomial&) = default;
    friend bool operator<(const ReducedMonomial& a, const ReducedMonomial& b) {
        return std::tie(a.u, a.n, a.k, a.l) < std::tie(b.u, b.n, b.k, b.l);
    }
};

/// Index of a reduced basis element: k for Li_{x0^n} monomials, k + |u| when
/// the word part is Li_u with u ending in x1.
inline long index_of(const ReducedMonomial& m) {
    if (m.k != 0 && m.l != 0) throw DomainError("index_of: mixed monomial; apply partial fractions first");
    if (!m.u.empty() && m.u.back() != Letter::x1) throw DomainError("index_of: word part is not reduced");
    return m.u.empty() ? m.k : m.k + static_cast<long>(m.u.size());
}

/// Index of a single SymFun monomial whose word lies in X*x1 or x0*.
inline long index_of(const SymKey& key) {
    auto [v, n] = split_trailing_x0(key.w);
    if (!v.empty() && n != 0) throw DomainError("index_of: word " + key.w.str() + " is not reduced");
    return index_of(ReducedMonomial{key.k, key.l, v, n});
}

/// The expansion of f on the reduced basis; coefficients refer to
/// z^k(1−z)^{−l} Li_u log^n/n!.
inline Linear<ReducedMonomial> reduce_basis(const SymFun& f) {
    Linear<ReducedMonomial> r;
    for (const auto& [key, c] : f)
        for (const auto& [t, d] : reduce_trailing_x0(key.w)) r.add(ReducedMonomial{key.k, key.l, t.u, t.n}, c * d);
    return r;
}

/// Li_u·log^n/n! as a SymFun, i.e. Li_{u ⧢ x0^n}.
inline SymFun sym_from_reduced(const ReducedMonomial& m, const Rational& c = 1) {
    SymFun f;
    for (const auto& [w, mult] : *shuffle_words(m.u, Word::power(Letter::x0, m.n)))
        f.add_scaled(sym_monomial(m.k, m.l, w), c * static_cast<unsigned long>(mult));
    return f;
}

struct Limit {
    enum class Kind { finite, divergent, non_elementary };
    Kind kind = Kind::finite;
    Rational value = 0;
};

/// lim_{z→0} f, exactly. Each Li_u (u ∈ X*x1) is a power series without
/// constant term, so f is a finite sum of (Laurent series)·log^n z.
inline Limit limit_at_zero(const SymFun& f) {
    std::map<unsigned, std::map<long, Rational>> bucket; // log power -> degree -> coefficient
    for (const auto& [key, c] : f) {
        if (key.k > 0) continue; // z^k·(bounded or log-growing) -> 0
        const std::size_t need = static_cast<std::size_t>(-key.k);
        std::vector<Rational> inv_pow(need + 1); // (1−z)^{−l}
        for (std::size_t m = 0; m <= need; ++m) inv_pow[m] = key.l == 0 ? Rational(m == 0 ? 1 : 0) : Rational(binomial(key.l + static_cast<long>(m) - 1, static_cast<long>(m)));
        for (const auto& [t, d] : reduce_trailing_x0(key.w)) {
            const auto a = li_taylor(composition_of(t.u), need);
            auto& slot = bucket[t.n];
            for (std::size_t i = 0; i <= need; ++i) {
                if (sgn(a[i]) == 0) continue;
                for (std::size_t m = 0; i + m <= need; ++m) {
                    if (sgn(inv_pow[m]) == 0) continue;
                    slot[key.k + static_cast<long>(i + m)] += c * d * a[i] * inv_pow[m];
                }
            }
        }
    }
    Limit out;
    for (const auto& [n, coeffs] : bucket)
        for (const auto& [deg, v] : coeffs) {
            if (sgn(v) == 0) continue;
            if (n == 0 && deg == 0) out.value = v;
            else if (n > 0 || deg < 0) return {Limit::Kind::divergent, 0};
        }
    return out;
}

/// lim_{z→1} f, exactly, when every polar and constant part (in t = 1−z) of
/// the word coefficients is exchangeable and hence a polynomial in log z and
/// log(1−z). Otherwise the limit would involve regularized polyzetas and the
/// result is `non_elementary`.
inline Limit limit_at_one(const SymFun& f) {
    // Q[j] = word polynomial multiplying t^j, j <= 0.
    std::map<long, NCPoly> Q;
    for (const auto& [key, c] : f) {
        // z^k = (1−t)^k; only the coefficients of t^0..t^l are needed.
        for (long m = 0; m <= key.l; ++m) {
            Rational coeff;
            if (key.k >= 0) {
                coeff = Rational(binomial(key.k, m));
                if (m % 2) coeff = -coeff;
            } else {
                coeff = Rational(binomial(-key.k + m - 1, m));
            }
            if (sgn(coeff) != 0) Q[m - key.l].add(key.w, c * coeff);
        }
    }
    // C[deg][b]: coefficient of t^deg log^b(t), deg <= 0.
    std::map<long, std::map<unsigned, Rational>> C;
    for (const auto& [j, q] : Q) {
        if (q.is_zero()) continue;
        if (!is_exchangeable(q)) return {Limit::Kind::non_elementary, 0};
        const std::size_t budget = static_cast<std::size_t>(-j);
        // log(1−t) = −Σ t^m/m, truncated at degree budget.
        std::vector<Rational> log1mt(budget + 1, 0);
        for (std::size_t m = 1; m <= budget; ++m) log1mt[m] = Rational(-1, static_cast<long>(m));
        std::map<std::pair<std::size_t, std::size_t>, Rational> seen;
        for (const auto& [w, c] : q) seen.try_emplace({w.zeros(), w.ones()}, c);
        for (const auto& [ab, c] : seen) {
            const auto [a, b] = ab;
            // (log(1−t))^a / a!
            std::vector<Rational> series(budget + 1, 0);
            series[0] = 1;
            for (std::size_t p = 0; p < a; ++p) {
                std::vector<Rational> next(budget + 1, 0);
                for (std::size_t i = 0; i <= budget; ++i) {
                    if (sgn(series[i]) == 0) continue;
                    for (std::size_t m = 1; i + m <= budget; ++m) next[i + m] += series[i] * log1mt[m];
                }
                series = std::move(next);
            }
            Rational scale = c / Rational(factorial(a) * factorial(b));
            if (b % 2) scale = -scale; // log(1/(1−z))^b = (−log t)^b
            for (std::size_t i = 0; i <= budget; ++i)
                if (sgn(series[i]) != 0) C[j + static_cast<long>(i)][static_cast<unsigned>(b)] += scale * series[i];
        }
    }
    Limit out;
    for (const auto& [deg, row] : C)
        for (const auto& [b, v] : row) {
            if (sgn(v) == 0) continue;
            if (deg == 0 && b == 0) out.value = v;
            else return {Limit::Kind::divergent, 0};
        }
    return out;
}

/// Numeric value of f at p.z.
inline Complex evaluate(const SymFun& f, const EvalParams& p) {
    PolylogEvaluator ev(p);
    Complex total = 0.0;
    for (const auto& [key, c] : f) total += c.get_d() * ev.li(key.w) * ev.star_factor(key.k, key.l);
    return total;
}

namespace detail {

/// Primitive of f against ω0 = dz/z or ω1 = dz/(1−z), split by basepoint:
/// every reduced basis element goes to the group its index selects, and each
/// group keeps the sum of its primitives so that cancelling singular parts
/// are treated together.
struct IotaGroups {
    SymFun from_zero;
    SymFun from_one;
};

inline IotaGroups iota_groups(Letter x, const SymFun& f) {
    IotaGroups g;
    for (const auto& [m, c] : reduce_basis(f)) {
        const SymFun b = sym_from_reduced(m);
        const SymFun integrand = x == Letter::x0 ? mul_rational(b, -1, 0) : mul_rational(b, 0, 1);
        const bool zero = x == Letter::x1 || index_of(m) >= 1;
        (zero ? g.from_zero : g.from_one).add_scaled(antiderivative(integrand), c);
    }
    return g;
}

inline void require_finite(const Limit& lim) {
    if (lim.kind == Limit::Kind::divergent) throw DomainError("divergent basepoint limit for iota");
    if (lim.kind == Limit::Kind::non_elementary) throw DomainError("non-elementary basepoint constant");
}

} // namespace detail

/// ι0(b) = ∫ b ω0 from 0 if ind(b) >= 1 and from 1 otherwise; ι1(b) = ∫_0^z b ω1.
/// θ_x(ι_x(f)) = f. Throws DomainError when a basepoint limit diverges or is
/// not a rational number.
inline SymFun iota(Letter x, const SymFun& f) {
    auto g = detail::iota_groups(x, f);
    const Limit l0 = limit_at_zero(g.from_zero);
    detail::require_finite(l0);
    const Limit l1 = limit_at_one(g.from_one);
    detail::require_finite(l1);
    SymFun r = std::move(g.from_zero);
    r += g.from_one;
    r.add(SymKey{0, 0, Word{}}, -(l0.value + l1.value));
    return r;
}

/// ι with a numeric fallback: ι_x(f) = symbolic + constant·1_Ω, where the
/// constant replaces a basepoint-1 limit that is not rational. That limit is
/// approximated by the primitive at 1 − delta; the neglected tail is
/// O(delta·|log delta|^m).
struct NumericIota {
    SymFun symbolic;
    Complex constant{0.0, 0.0};
};

inline NumericIota iota_numeric(Letter x, const SymFun& f, double delta = 1e-5) {
    auto g = detail::iota_groups(x, f);
    const Limit l0 = limit_at_zero(g.from_zero);
    detail::require_finite(l0);
    const Limit l1 = limit_at_one(g.from_one);
    if (l1.kind == Limit::Kind::divergent) detail::require_finite(l1);
    NumericIota out;
    out.symbolic = std::move(g.from_zero);
    out.symbolic += g.from_one;
    out.symbolic.add(SymKey{0, 0, Word{}}, -l0.value);
    if (l1.kind == Limit::Kind::finite) {
        out.symbolic.add(SymKey{0, 0, Word{}}, -l1.value);
    } else {
        EvalParams near_one;
        near_one.z = Complex(1.0 - delta, 0.0);
        near_one.eps = 1e-14;
        near_one.max_terms = 200'000'000;
        out.constant = -evaluate(g.from_one, near_one);
    }
    return out;
}

enum class OperatorStep { theta0, theta1, iota0, iota1 };

inline SymFun apply_step(OperatorStep op, const SymFun& f) {
    switch (op) {
    case OperatorStep::theta0: return theta(Letter::x0, f);
    case OperatorStep::theta1: return theta(Letter::x1, f);
    case OperatorStep::iota0: return iota(Letter::x0, f);
    case OperatorStep::iota1: return iota(Letter::x1, f);
    }
    return f;
}

/// Composition op_1 ∘ op_2 ∘ ... ∘ op_n; the rightmost operator acts first.
inline SymFun apply_operators(std::span<const OperatorStep> ops, SymFun f) {
    for (std::size_t i = ops.size(); i-- > 0;) f = apply_step(ops[i], f);
    return f;
}

enum class WordOpKind { Theta, Iota };

/// Θ(v x_i) = Θ(v) θ_i and ℑ(v x_i) = ℑ(v) ι_i, both sending the empty word to Id.
inline SymFun apply_word_op(WordOpKind kind, const Word& w, SymFun f) {
    for (std::size_t i = w.size(); i-- > 0;) {
        const Letter x = w[i];
        f = kind == WordOpKind::Theta ? theta(x, f) : iota(x, f);
    }
    return f;
}

/// The operator word θ0^{t1+1} ι1 ... θ0^{tr+1} ι1 whose action on 1_Ω gives Li^-_t.
inline std::vector<OperatorStep> neg_index_operator_word(const Composition& t) {
    std::vector<OperatorStep> ops;
    for (auto part : t.parts()) {
        for (std::uint32_t i = 0; i < part + 1; ++i) ops.push_back(OperatorStep::theta0);
        ops.push_back(OperatorStep::iota1);
    }
    return ops;
}

} // namespace polystar
