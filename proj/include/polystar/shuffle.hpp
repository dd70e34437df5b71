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
#include <map>
#include <memory>
#include <mutex>
#include <shared_mutex>
#include <unordered_map>
#include <utility>
#include <vector>

#include "polystar/linear.hpp"
#include "polystar/word.hpp"

namespace polystar {

/// Noncommutative polynomial over X with rational coefficients.
using NCPoly = Linear<Word>;
/// Polynomial over the Y-alphabet.
using YPoly = Linear<YWord>;
/// Element of the tensor square, as produced by the unshuffle coproduct.
using WordPair = std::pair<Word, Word>;
using TensorPoly = Linear<WordPair>;

inline NCPoly word_poly(const Word& w, const Rational& c = 1) { return NCPoly(w, c); }
inline NCPoly word_poly(std::string_view w, const Rational& c = 1) { return NCPoly(Word::parse(w), c); }
inline NCPoly constant_poly(const Rational& c) { return NCPoly(Word{}, c); }

/// ⟨p|w⟩
inline Rational pairing(const NCPoly& p, const NCPoly& q) {
    Rational s = 0;
    for (const auto& [w, c] : p) s += c * q.coeff(w);
    return s;
}

inline std::size_t degree(const NCPoly& p) {
    std::size_t d = 0;
    for (const auto& [w, c] : p) d = std::max(d, w.size());
    return d;
}

inline NCPoly conc(const NCPoly& p, const NCPoly& q) {
    NCPoly r;
    for (const auto& [u, a] : p)
        for (const auto& [v, b] : q) r.add(u * v, a * b);
    return r;
}

namespace detail {

struct WordPairHash {
    std::size_t operator()(const std::pair<Word, Word>& p) const noexcept {
        std::hash<Word> h;
        return h(p.first) * 31 + h(p.second);
    }
};

using ShuffleTerms = std::vector<std::pair<Word, std::uint64_t>>;

/// Process-wide memo for word shuffles. Entries are immutable once inserted,
/// so concurrent readers only ever observe complete values.
class ShuffleCache {
public:
    static ShuffleCache& instance() {
        static ShuffleCache cache;
        return cache;
    }

    std::shared_ptr<const ShuffleTerms> find(const Word& u, const Word& v) const {
        std::shared_lock lock(mutex_);
        auto it = map_.find({u, v});
        return it == map_.end() ? nullptr : it->second;
    }

    std::shared_ptr<const ShuffleTerms> insert(const Word& u, const Word& v, ShuffleTerms terms) {
        auto ptr = std::make_shared<const ShuffleTerms>(std::move(terms));
        std::unique_lock lock(mutex_);
        auto [it, inserted] = map_.try_emplace({u, v}, ptr);
        return it->second;
    }

    void clear() {
        std::unique_lock lock(mutex_);
        map_.clear();
    }

private:
    mutable std::shared_mutex mutex_;
    std::unordered_map<std::pair<Word, Word>, std::shared_ptr<const ShuffleTerms>, WordPairHash> map_;
};

} // namespace detail

/// u ⧢ v on words, as (word, multiplicity) pairs sorted by word.
///
/// Uses au ⧢ bv = a(u ⧢ bv) + b(au ⧢ v), memoized on the ordered pair
/// (shuffle is commutative, so (u,v) and (v,u) share an entry).
inline std::shared_ptr<const detail::ShuffleTerms> shuffle_words(const Word& u, const Word& v) {
    const Word& a = u < v ? u : v;
    const Word& b = u < v ? v : u;
    auto& cache = detail::ShuffleCache::instance();
    if (auto hit = cache.find(a, b)) return hit;

    std::map<Word, std::uint64_t> acc;
    if (a.empty()) {
        acc[b] = 1;
    } else if (b.empty()) {
        acc[a] = 1;
    } else {
        for (const auto& [w, n] : *shuffle_words(a.suffix_from(1), b)) acc[w.prepended(a.front())] += n;
        for (const auto& [w, n] : *shuffle_words(a, b.suffix_from(1))) acc[w.prepended(b.front())] += n;
    }
    return cache.insert(a, b, detail::ShuffleTerms(acc.begin(), acc.end()));
}

inline NCPoly shuffle(const Word& u, const Word& v) {
    NCPoly r;
    for (const auto& [w, n] : *shuffle_words(u, v)) r.add(w, Rational(static_cast<unsigned long>(n)));
    return r;
}

inline NCPoly shuffle(const NCPoly& p, const NCPoly& q) {
    NCPoly r;
    for (const auto& [u, a] : p)
        for (const auto& [v, b] : q) {
            const Rational ab = a * b;
            for (const auto& [w, n] : *shuffle_words(u, v)) r.add(w, ab * static_cast<unsigned long>(n));
        }
    return r;
}

/// p^{⧢n}
inline NCPoly shuffle_power(const NCPoly& p, unsigned n) {
    NCPoly r = constant_poly(1);
    for (unsigned i = 0; i < n; ++i) r = shuffle(r, p);
    return r;
}

namespace detail {

inline void stuffle_rec(const std::uint32_t* u, std::size_t nu, const std::uint32_t* v, std::size_t nv,
                        std::vector<std::uint32_t>& prefix, const Rational& c, YPoly& out) {
    if (nu == 0 || nv == 0) {
        std::vector<std::uint32_t> w = prefix;
        w.insert(w.end(), u, u + nu);
        w.insert(w.end(), v, v + nv);
        out.add(YWord(std::move(w)), c);
        return;
    }
    prefix.push_back(u[0]);
    stuffle_rec(u + 1, nu - 1, v, nv, prefix, c, out);
    prefix.back() = v[0];
    stuffle_rec(u, nu, v + 1, nv - 1, prefix, c, out);
    prefix.back() = u[0] + v[0];
    stuffle_rec(u + 1, nu - 1, v + 1, nv - 1, prefix, c, out);
    prefix.pop_back();
}

inline void require_positive(const YWord& y, const char* op) {
    if (y.has_zero_index())
        throw DomainError(std::string(op) + ": index 0 is outside the alphabet Y");
}

} // namespace detail

/// Quasi-shuffle on Y: y_s u ⊔⊔ y_t v = y_s(u ⊔⊔ y_t v) + y_t(y_s u ⊔⊔ v) + y_{s+t}(u ⊔⊔ v).
inline YPoly stuffle(const YPoly& p, const YPoly& q) {
    YPoly r;
    std::vector<std::uint32_t> prefix;
    for (const auto& [u, a] : p) {
        detail::require_positive(u, "stuffle");
        for (const auto& [v, b] : q) {
            detail::require_positive(v, "stuffle");
            detail::stuffle_rec(u.indices.data(), u.size(), v.indices.data(), v.size(), prefix, a * b, r);
        }
    }
    return r;
}

inline YPoly conc(const YPoly& p, const YPoly& q) {
    YPoly r;
    for (const auto& [u, a] : p)
        for (const auto& [v, b] : q) {
            auto idx = u.indices;
            idx.insert(idx.end(), v.indices.begin(), v.indices.end());
            r.add(YWord(std::move(idx)), a * b);
        }
    return r;
}

/// Δ⧢(w): every splitting of the positions of w into a subword and its
/// complementary subword, counted with multiplicity.
inline TensorPoly unshuffle(const Word& w) {
    TensorPoly r;
    r.add({Word{}, Word{}}, 1);
    for (std::size_t i = w.size(); i-- > 0;) {
        const Letter a = w[i];
        TensorPoly next;
        for (const auto& [uv, c] : r) {
            next.add({uv.first.prepended(a), uv.second}, c);
            next.add({uv.first, uv.second.prepended(a)}, c);
        }
        r = std::move(next);
    }
    return r;
}

/// p ◁ s, defined by ⟨p ◁ s | w⟩ = ⟨s | w p⟩.
inline NCPoly left_residual(const NCPoly& p, const NCPoly& s) {
    NCPoly r;
    for (const auto& [u, a] : p)
        for (const auto& [v, b] : s)
            if (v.ends_with(u)) r.add(v.prefix(v.size() - u.size()), a * b);
    return r;
}

/// s ▷ p, defined by ⟨s ▷ p | w⟩ = ⟨s | p w⟩.
inline NCPoly right_residual(const NCPoly& s, const NCPoly& p) {
    NCPoly r;
    for (const auto& [u, a] : p)
        for (const auto& [v, b] : s)
            if (v.starts_with(u)) r.add(v.suffix_from(u.size()), a * b);
    return r;
}

/// True iff all words of equal bidegree carry equal coefficients; a bidegree
/// (i, j) that occurs at all must therefore occur on all C(i+j, i) words.
inline bool is_exchangeable(const NCPoly& p) {
    std::map<std::pair<std::size_t, std::size_t>, std::pair<Rational, std::size_t>> seen;
    for (const auto& [w, c] : p) {
        auto key = std::make_pair(w.zeros(), w.ones());
        auto [it, inserted] = seen.try_emplace(key, c, 0);
        if (!inserted && it->second.first != c) return false;
        ++it->second.second;
    }
    for (const auto& [bideg, entry] : seen) {
        Integer expected = binomial(static_cast<long>(bideg.first + bideg.second), static_cast<long>(bideg.first));
        if (Integer(static_cast<unsigned long>(entry.second)) != expected) return false;
    }
    return true;
}

} // namespace polystar
