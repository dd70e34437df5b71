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

// Brute-force reference implementations. Nothing here calls into the
// library's algorithms; they only share the value types.

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <functional>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "polystar/polystar.hpp"

namespace oracle {

using polystar::Rational;

/// Multiset of interleavings of u and v, by enumerating position masks.
inline std::map<std::string, long> shuffle(const std::string& u, const std::string& v) {
    std::map<std::string, long> out;
    const std::size_t n = u.size() + v.size();
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
        if (static_cast<std::size_t>(std::popcount(mask)) != u.size()) continue;
        std::string w;
        std::size_t i = 0, j = 0;
        for (std::size_t p = 0; p < n; ++p) w.push_back((mask >> p) & 1u ? u[i++] : v[j++]);
        ++out[w];
    }
    return out;
}

/// All (u, v) with w an interleaving of u and v, with multiplicity.
inline std::map<std::pair<std::string, std::string>, long> unshuffle(const std::string& w) {
    std::map<std::pair<std::string, std::string>, long> out;
    for (std::uint32_t mask = 0; mask < (1u << w.size()); ++mask) {
        std::string u, v;
        for (std::size_t p = 0; p < w.size(); ++p) ((mask >> p) & 1u ? u : v).push_back(w[p]);
        ++out[{u, v}];
    }
    return out;
}

/// Strictly smaller than every proper rotation.
inline bool is_lyndon(const std::string& w) {
    if (w.empty()) return false;
    for (std::size_t k = 1; k < w.size(); ++k)
        if (!(w < w.substr(k) + w.substr(0, k))) return false;
    return true;
}

inline std::vector<std::string> all_words(std::size_t n) {
    std::vector<std::string> out;
    for (std::uint64_t code = 0; code < (std::uint64_t{1} << n); ++code) {
        std::string w;
        for (std::size_t i = 0; i < n; ++i) w.push_back((code >> (n - 1 - i)) & 1u ? '1' : '0');
        out.push_back(w);
    }
    return out;
}

inline std::size_t lyndon_count(std::size_t n) {
    std::size_t c = 0;
    for (const auto& w : all_words(n)) c += is_lyndon(w);
    return c;
}

inline int mobius(int n) {
    int m = 1;
    for (int p = 2; p * p <= n; ++p) {
        if (n % p) continue;
        n /= p;
        if (n % p == 0) return 0;
        m = -m;
    }
    return n > 1 ? -m : m;
}

/// Witt's necklace formula for binary Lyndon words.
inline long necklace(int n) {
    long s = 0;
    for (int d = 1; d <= n; ++d)
        if (n % d == 0) s += mobius(d) * (1L << (n / d));
    return s / n;
}

/// Every factorization of w into nonincreasing Lyndon words (there is one).
inline std::vector<std::vector<std::string>> lyndon_factorizations(const std::string& w) {
    std::vector<std::vector<std::string>> out;
    std::vector<std::string> cur;
    std::function<void(std::size_t)> rec = [&](std::size_t pos) {
        if (pos == w.size()) {
            out.push_back(cur);
            return;
        }
        for (std::size_t len = 1; pos + len <= w.size(); ++len) {
            const std::string f = w.substr(pos, len);
            if (!is_lyndon(f) || (!cur.empty() && cur.back() < f)) continue;
            cur.push_back(f);
            rec(pos + len);
            cur.pop_back();
        }
    };
    rec(0);
    return out;
}

/// Σ_{N >= n1 > ... > nr > 0} Π n_i^{−s_i} by nested loops.
inline Rational harmonic(const std::vector<std::uint32_t>& s, std::uint64_t N) {
    std::function<Rational(std::size_t, std::uint64_t)> rec = [&](std::size_t i, std::uint64_t bound) -> Rational {
        if (i == s.size()) return 1;
        Rational total = 0;
        for (std::uint64_t n = 1; n <= bound; ++n) {
            Rational t = rec(i + 1, n - 1);
            for (std::uint32_t k = 0; k < s[i]; ++k) t /= n;
            total += t;
        }
        return total;
    };
    return rec(0, N);
}

/// Σ over chains N = n1 > n2 > ... > nr > 0 of Π n_i^{s_i}.
inline Rational neg_coeff(const std::vector<std::uint32_t>& s, std::uint64_t N) {
    std::function<Rational(std::size_t, std::uint64_t)> rec = [&](std::size_t i, std::uint64_t bound) -> Rational {
        if (i == s.size()) return 1;
        Rational total = 0;
        for (std::uint64_t n = 1; n <= bound; ++n) {
            Rational t = rec(i + 1, n - 1);
            for (std::uint32_t k = 0; k < s[i]; ++k) t *= n;
            total += t;
        }
        return total;
    };
    if (s.empty()) return N == 0 ? 1 : 0;
    Rational lead = 1;
    for (std::uint32_t k = 0; k < s[0]; ++k) lead *= N;
    return lead * rec(1, N - 1);
}

/// Truncated Li_s(z) for real z, nested loops, n1 <= M.
inline double li(const std::vector<std::uint32_t>& s, double z, std::uint64_t M) {
    std::function<double(std::size_t, std::uint64_t)> rec = [&](std::size_t i, std::uint64_t bound) -> double {
        if (i == s.size()) return 1.0;
        double total = 0;
        for (std::uint64_t n = 1; n <= bound; ++n) {
            double t = rec(i + 1, n - 1) / std::pow(double(n), double(s[i]));
            if (i == 0) t *= std::pow(z, double(n));
            total += t;
        }
        return total;
    };
    return rec(0, M);
}

/// Rank of a rational matrix by Gaussian elimination.
inline std::size_t rank(std::vector<std::vector<Rational>> m) {
    std::size_t r = 0;
    const std::size_t cols = m.empty() ? 0 : m[0].size();
    for (std::size_t c = 0; c < cols && r < m.size(); ++c) {
        std::size_t p = r;
        while (p < m.size() && sgn(m[p][c]) == 0) ++p;
        if (p == m.size()) continue;
        std::swap(m[p], m[r]);
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (i == r || sgn(m[i][c]) == 0) continue;
            const Rational f = m[i][c] / m[r][c];
            for (std::size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
        }
        ++r;
    }
    return r;
}

/// Random helpers with explicit generators so failures replay.
inline polystar::Word random_word(std::mt19937_64& g, std::size_t max_len, std::size_t min_len = 0) {
    std::uniform_int_distribution<std::size_t> len(min_len, max_len);
    std::bernoulli_distribution bit(0.5);
    polystar::Word w;
    const auto n = len(g);
    for (std::size_t i = 0; i < n; ++i) w.push_back(bit(g) ? polystar::Letter::x1 : polystar::Letter::x0);
    return w;
}

inline Rational random_rational(std::mt19937_64& g, long num_bound = 5, long den_bound = 4) {
    std::uniform_int_distribution<long> num(-num_bound, num_bound), den(1, den_bound);
    Rational r(num(g), den(g));
    r.canonicalize();
    return r;
}

inline Rational random_nonzero(std::mt19937_64& g) {
    Rational r;
    do r = random_rational(g);
    while (sgn(r) == 0);
    return r;
}

inline polystar::NCPoly random_poly(std::mt19937_64& g, std::size_t max_degree, std::size_t terms) {
    polystar::NCPoly p;
    for (std::size_t i = 0; i < terms; ++i) p.add(random_word(g, max_degree), random_nonzero(g));
    return p;
}

} // namespace oracle
