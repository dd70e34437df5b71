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

#include <cstddef>
#include <initializer_list>
#include <map>
#include <utility>

#include "polystar/rational.hpp"

namespace polystar {

/// A finite Q-linear combination of keys. Zero coefficients are never stored,
/// so two combinations are equal iff their maps are equal.
///
/// Keys are kept in their natural order; iteration order is the canonical
/// serialization order.
template <class Key, class Compare = std::less<Key>>
class Linear {
public:
    using key_type = Key;
    using map_type = std::map<Key, Rational, Compare>;
    using const_iterator = typename map_type::const_iterator;

    Linear() = default;
    Linear(std::initializer_list<std::pair<const Key, Rational>> init) {
        for (const auto& [k, c] : init) add(k, c);
    }
    explicit Linear(const Key& k, const Rational& c = 1) { add(k, c); }

    void add(const Key& k, const Rational& c) {
        if (sgn(c) == 0) return;
        auto [it, inserted] = terms_.try_emplace(k, c);
        if (!inserted) {
            it->second += c;
            if (sgn(it->second) == 0) terms_.erase(it);
        }
    }
    void add(Key&& k, const Rational& c) {
        if (sgn(c) == 0) return;
        auto [it, inserted] = terms_.try_emplace(std::move(k), c);
        if (!inserted) {
            it->second += c;
            if (sgn(it->second) == 0) terms_.erase(it);
        }
    }

    /// this += c * other
    void add_scaled(const Linear& other, const Rational& c) {
        if (sgn(c) == 0) return;
        for (const auto& [k, v] : other.terms_) add(k, c * v);
    }

    Rational coeff(const Key& k) const {
        auto it = terms_.find(k);
        return it == terms_.end() ? Rational(0) : it->second;
    }

    bool empty() const noexcept { return terms_.empty(); }
    bool is_zero() const noexcept { return terms_.empty(); }
    std::size_t size() const noexcept { return terms_.size(); }
    const_iterator begin() const noexcept { return terms_.begin(); }
    const_iterator end() const noexcept { return terms_.end(); }
    const map_type& terms() const noexcept { return terms_; }

    Linear& operator+=(const Linear& o) {
        for (const auto& [k, c] : o.terms_) add(k, c);
        return *this;
    }
    Linear& operator-=(const Linear& o) {
        for (const auto& [k, c] : o.terms_) add(k, -c);
        return *this;
    }
    Linear& operator*=(const Rational& c) {
        if (sgn(c) == 0) {
            terms_.clear();
        } else {
            for (auto& [k, v] : terms_) v *= c;
        }
        return *this;
    }

    friend Linear operator+(Linear a, const Linear& b) { return a += b; }
    friend Linear operator-(Linear a, const Linear& b) { return a -= b; }
    friend Linear operator-(Linear a) { return a *= Rational(-1); }
    friend Linear operator*(const Rational& c, Linear a) { return a *= c; }
    friend Linear operator*(Linear a, const Rational& c) { return a *= c; }

    friend bool operator==(const Linear& a, const Linear& b) { return a.terms_ == b.terms_; }

private:
    map_type terms_;
};

} // namespace polystar
