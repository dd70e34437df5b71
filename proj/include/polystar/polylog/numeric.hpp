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

#include <cmath>
#include <complex>
#include <cstdint>
#include <unordered_map>
#include <vector>

#include "polystar/polylog/reduce.hpp"
#include "polystar/star_series.hpp"

namespace polystar {

using Complex = std::complex<double>;

/// Stirling number of the second kind, S2(n, j) = j·S2(n−1, j) + S2(n−1, j−1).
inline Integer stirling2(unsigned n, unsigned j) {
    if (j > n) return 0;
    std::vector<Integer> row(j + 1, 0);
    row[0] = 1; // S2(0, 0)
    for (unsigned m = 1; m <= n; ++m) {
        for (unsigned i = std::min(m, j); i >= 1; --i) row[i] = Integer(i) * row[i] + row[i - 1];
        row[0] = 0;
    }
    return row[j];
}

/// H_s(N) = Σ_{N ≥ n1 > ... > nr > 0} 1/(n1^s1 ... nr^sr), exactly.
inline Rational harmonic_sum(const Composition& s, std::uint64_t N) {
    const auto& parts = s.parts();
    for (auto p : parts)
        if (p == 0) throw DomainError("harmonic_sum needs a positive composition");
    const std::size_t r = parts.size();
    if (r == 0) return 1;
    // acc[j] = H_{s_{j+1}..s_r}(n); acc[r] = 1.
    std::vector<Rational> acc(r + 1, 0);
    acc[r] = 1;
    Integer power;
    for (std::uint64_t n = 1; n <= N; ++n) {
        for (std::size_t j = 0; j < r; ++j) {
            if (sgn(acc[j + 1]) == 0) continue;
            mpz_ui_pow_ui(power.get_mpz_t(), n, parts[j]);
            acc[j] += acc[j + 1] / Rational(power);
        }
    }
    return acc[0];
}

/// Coefficient of z^N in Li^-_s(z) = Σ_{n1>...>nr>0} n1^s1 ... nr^sr z^n1.
inline Rational neg_taylor_coeff(const Composition& s, std::uint64_t N) {
    const auto& parts = s.parts();
    const std::size_t r = parts.size();
    if (r == 0) return N == 0 ? 1 : 0;
    if (N == 0) return 0;
    // tail[j] = Σ over chains m > n_{j+1} > ... > n_r > 0 of Π_{i>j} n_i^{s_i},
    // for the current window top m.
    std::vector<Integer> tail(r + 1, 0);
    tail[r] = 1;
    Integer power;
    for (std::uint64_t m = 1; m < N; ++m) {
        for (std::size_t j = 1; j < r; ++j) {
            if (sgn(tail[j + 1]) == 0) continue;
            mpz_ui_pow_ui(power.get_mpz_t(), m, parts[j]);
            tail[j] += power * tail[j + 1];
        }
    }
    mpz_ui_pow_ui(power.get_mpz_t(), N, parts[0]);
    return Rational(power * tail[1]);
}

/// Exact Taylor coefficients a_0..a_M of Li_s(z) for a positive composition.
inline std::vector<Rational> li_taylor(const Composition& s, std::size_t M) {
    const auto& parts = s.parts();
    const std::size_t r = parts.size();
    std::vector<Rational> a(M + 1, 0);
    if (r == 0) {
        a[0] = 1;
        return a;
    }
    std::vector<Rational> acc(r + 1, 0);
    acc[r] = 1;
    Integer power;
    for (std::size_t n = 1; n <= M; ++n) {
        mpz_ui_pow_ui(power.get_mpz_t(), n, parts[0]);
        a[n] = acc[1] / Rational(power);
        for (std::size_t j = 0; j < r; ++j) {
            if (sgn(acc[j + 1]) == 0) continue;
            mpz_ui_pow_ui(power.get_mpz_t(), n, parts[j]);
            acc[j] += acc[j + 1] / Rational(power);
        }
    }
    return a;
}

struct EvalParams {
    Complex z{0.5, 0.0};
    double eps = 1e-15;
    std::size_t max_terms = 10'000'000;
};

namespace detail {

inline bool is_origin(const Complex& z) { return z == Complex(0.0, 0.0); }

inline void validate(const EvalParams& p) {
    if (!(std::abs(p.z) < 1.0)) throw DomainError("evaluation needs |z| < 1");
    if (p.z.imag() == 0.0 && p.z.real() < 0.0) throw DomainError("z lies on the cut (-inf, 0]");
    if (!(p.eps > 0.0)) throw DomainError("eps must be positive");
    if (p.max_terms == 0) throw DomainError("max_terms must be positive");
}

/// Σ_{n1>...>nr>0} z^n1 / (n1^s1 ... nr^sr), summed until the last added term
/// is below eps·(1−|z|) (two consecutive terms, past the first few nonzero ones).
inline Complex li_series(const std::vector<std::uint32_t>& s, const EvalParams& p) {
    const std::size_t r = s.size();
    if (r == 0) return 1.0;
    if (is_origin(p.z)) return 0.0;
    const double threshold = p.eps * (1.0 - std::abs(p.z));
    std::vector<double> acc(r + 1, 0.0);
    acc[r] = 1.0;
    Complex zn = 1.0, sum = 0.0;
    int quiet = 0;
    for (std::size_t n = 1; n <= p.max_terms; ++n) {
        zn *= p.z;
        const double dn = static_cast<double>(n);
        const Complex term = zn * acc[1] / std::pow(dn, static_cast<double>(s[0]));
        sum += term;
        for (std::size_t j = 1; j < r; ++j) acc[j] += acc[j + 1] / std::pow(dn, static_cast<double>(s[j]));
        if (n >= r + 4 && std::abs(term) < threshold) {
            if (++quiet >= 2) return sum;
        } else {
            quiet = 0;
        }
        if (std::abs(zn) == 0.0 && n >= r) return sum;
    }
    throw NumericError("no convergence at tolerance");
}

} // namespace detail

/// Numeric Li_w(z) for arbitrary words, with per-instance memoization of the
/// positive-index series at the fixed point z.
class PolylogEvaluator {
public:
    explicit PolylogEvaluator(EvalParams p) : params_(p) {
        if (!detail::is_origin(p.z)) detail::validate(p);
        log_z_ = std::log(p.z);
        log_1mz_ = std::log(1.0 - p.z);
    }

    const EvalParams& params() const noexcept { return params_; }
    Complex log_z() const noexcept { return log_z_; }
    Complex log_one_minus_z() const noexcept { return log_1mz_; }

    /// Li_u for u ∈ X*x1 ∪ {ε}.
    Complex li_positive(const Word& u) {
        if (auto it = cache_.find(u); it != cache_.end()) return it->second;
        const Complex v = detail::li_series(composition_of(u).parts(), params_);
        cache_.emplace(u, v);
        return v;
    }

    Complex li(const Word& w) {
        Complex total = 0.0;
        for (const auto& [t, c] : reduce_trailing_x0(w)) {
            Complex lp = 1.0;
            if (t.n > 0) {
                if (detail::is_origin(params_.z)) throw DomainError("log(z) is singular at z = 0");
                lp = std::pow(log_z_, static_cast<double>(t.n)) / std::tgamma(static_cast<double>(t.n) + 1.0);
            }
            total += c.get_d() * li_positive(t.u) * lp;
        }
        return total;
    }

    /// z^a0 (1−z)^{−a1}, principal branch.
    Complex star_factor(const Rational& a0, const Rational& a1) const {
        Complex f = 1.0;
        if (sgn(a0) != 0) {
            if (detail::is_origin(params_.z)) {
                if (sgn(a0) < 0) throw DomainError("negative power of z at z = 0");
                return 0.0;
            }
            f *= std::exp(a0.get_d() * log_z_);
        }
        if (sgn(a1) != 0) f *= std::exp(-a1.get_d() * log_1mz_);
        return f;
    }

private:
    EvalParams params_;
    Complex log_z_, log_1mz_;
    std::unordered_map<Word, Complex> cache_;
};

inline Complex eval_li_word(const Word& w, const EvalParams& p) {
    PolylogEvaluator ev(p);
    return ev.li(w);
}

/// Li^(2) on the star algebra: w ⧢ (a0x0)* ⧢ (a1x1)* ↦ Li_w(z)·z^a0·(1−z)^{−a1}.
inline Complex eval_li2(const StarSeries& s, const EvalParams& p) {
    PolylogEvaluator ev(p);
    Complex total = 0.0;
    for (const auto& [t, c] : s) total += c.get_d() * ev.li(t.w) * ev.star_factor(t.a0, t.a1);
    return total;
}

inline Complex eval_li_poly(const NCPoly& q, const EvalParams& p) {
    PolylogEvaluator ev(p);
    Complex total = 0.0;
    for (const auto& [w, c] : q) total += c.get_d() * ev.li(w);
    return total;
}

} // namespace polystar
