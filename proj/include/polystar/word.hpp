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

#include <bit>
#include <compare>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "polystar/errors.hpp"

namespace polystar {

/// The two letters of X, ordered x0 < x1.
enum class Letter : std::uint8_t { x0 = 0, x1 = 1 };

/// A word over X = {x0, x1}, packed into one machine word.
///
/// Letter i is stored at bit 63 - i and the unused low bits are zero, so
/// comparing (bits, size) lexicographically is exactly the lexicographic
/// order on words with x0 < x1 and a proper prefix before its extensions.
class Word {
public:
    static constexpr std::size_t max_size = 64;

    constexpr Word() = default;

    static Word letter(Letter a) {
        Word w;
        w.push_back(a);
        return w;
    }

    /// Power x^n of a single letter.
    static Word power(Letter a, std::size_t n) {
        Word w;
        for (std::size_t i = 0; i < n; ++i) w.push_back(a);
        return w;
    }

    /// Text syntax: a string over {0,1}, e.g. "011" = x0 x1 x1.
    static Word parse(std::string_view text) {
        Word w;
        for (char c : text) {
            if (c == '0') w.push_back(Letter::x0);
            else if (c == '1') w.push_back(Letter::x1);
            else throw DomainError("word literal may only contain 0 and 1: '" + std::string(text) + "'");
        }
        return w;
    }

    constexpr std::size_t size() const noexcept { return size_; }
    constexpr bool empty() const noexcept { return size_ == 0; }
    constexpr std::uint64_t bits() const noexcept { return bits_; }

    Letter operator[](std::size_t i) const noexcept {
        return static_cast<Letter>((bits_ >> (63 - i)) & 1u);
    }
    Letter front() const noexcept { return (*this)[0]; }
    Letter back() const noexcept { return (*this)[size_ - 1]; }

    void push_back(Letter a) {
        if (size_ == max_size) throw DomainError("word longer than 64 letters");
        if (a == Letter::x1) bits_ |= std::uint64_t{1} << (63 - size_);
        ++size_;
    }

    /// a·w
    Word prepended(Letter a) const {
        if (size_ == max_size) throw DomainError("word longer than 64 letters");
        Word w;
        w.bits_ = (bits_ >> 1) | (a == Letter::x1 ? std::uint64_t{1} << 63 : 0);
        w.size_ = static_cast<std::uint8_t>(size_ + 1);
        return w;
    }

    /// Drops the first n letters.
    Word suffix_from(std::size_t n) const noexcept {
        Word w;
        if (n >= size_) return w;
        w.bits_ = bits_ << n;
        w.size_ = static_cast<std::uint8_t>(size_ - n);
        return w;
    }

    /// Keeps the first n letters.
    Word prefix(std::size_t n) const noexcept {
        if (n >= size_) return *this;
        Word w;
        w.bits_ = n == 0 ? 0 : bits_ & ~(~std::uint64_t{0} >> n);
        w.size_ = static_cast<std::uint8_t>(n);
        return w;
    }

    bool starts_with(const Word& p) const noexcept {
        return p.size_ <= size_ && prefix(p.size_) == p;
    }
    bool ends_with(const Word& s) const noexcept {
        return s.size_ <= size_ && suffix_from(size_ - s.size_) == s;
    }

    /// |w|_x1; |w|_x0 is size() - ones().
    std::size_t ones() const noexcept { return static_cast<std::size_t>(std::popcount(bits_)); }
    std::size_t zeros() const noexcept { return size_ - ones(); }
    std::size_t count(Letter a) const noexcept { return a == Letter::x1 ? ones() : zeros(); }

    /// Cyclic rotation by k letters to the left.
    Word rotated(std::size_t k) const {
        if (size_ == 0) return *this;
        k %= size_;
        return suffix_from(k) * prefix(k);
    }

    std::string str() const {
        std::string s;
        s.reserve(size_);
        for (std::size_t i = 0; i < size_; ++i) s.push_back((*this)[i] == Letter::x1 ? '1' : '0');
        return s;
    }

    friend Word operator*(const Word& a, const Word& b) {
        if (a.size_ + b.size_ > max_size) throw DomainError("word longer than 64 letters");
        Word w;
        w.bits_ = a.bits_ | (a.size_ == 64 ? 0 : (b.bits_ >> a.size_));
        w.size_ = static_cast<std::uint8_t>(a.size_ + b.size_);
        return w;
    }

    friend constexpr bool operator==(const Word&, const Word&) = default;
    friend constexpr std::strong_ordering operator<=>(const Word& a, const Word& b) {
        if (auto c = a.bits_ <=> b.bits_; c != 0) return c;
        return a.size_ <=> b.size_;
    }

private:
    std::uint64_t bits_ = 0;
    std::uint8_t size_ = 0;
};

/// A word over Y_0 = {y_0, y_1, ...}; letter y_s is stored as index s.
///
/// The alphabet is ordered y_0 > y_1 > ... but no computation here depends
/// on that order; the comparison operator below is plain lexicographic on
/// indices and only serves as a canonical container order.
struct YWord {
    std::vector<std::uint32_t> indices;

    YWord() = default;
    explicit YWord(std::vector<std::uint32_t> idx) : indices(std::move(idx)) {}

    /// Text syntax: comma-separated indices, e.g. "2,1"; "" is the empty word.
    static YWord parse(std::string_view text) {
        YWord y;
        std::string cur;
        auto flush = [&] {
            if (cur.empty()) throw DomainError("empty index in Y-word '" + std::string(text) + "'");
            unsigned long v = std::stoul(cur);
            y.indices.push_back(static_cast<std::uint32_t>(v));
            cur.clear();
        };
        bool any = false;
        for (char c : text) {
            if (c == ' ') continue;
            if (c >= '0' && c <= '9') {
                cur.push_back(c);
                any = true;
            } else if (c == ',') {
                flush();
            } else {
                throw DomainError("Y-word may only contain digits and commas: '" + std::string(text) + "'");
            }
        }
        if (any || !cur.empty()) flush();
        return y;
    }

    std::size_t size() const noexcept { return indices.size(); }
    bool empty() const noexcept { return indices.empty(); }
    bool has_zero_index() const noexcept {
        for (auto s : indices)
            if (s == 0) return true;
        return false;
    }
    std::uint64_t weight() const noexcept {
        std::uint64_t w = 0;
        for (auto s : indices) w += s;
        return w;
    }

    std::string str() const {
        std::string s;
        for (std::size_t i = 0; i < indices.size(); ++i) {
            if (i) s.push_back(',');
            s += std::to_string(indices[i]);
        }
        return s;
    }

    friend bool operator==(const YWord&, const YWord&) = default;
    friend auto operator<=>(const YWord&, const YWord&) = default;
};

/// An index tuple (s1, ..., sr) for polylogarithms and harmonic sums.
///
/// Positive compositions (all parts >= 1) index Li and H; nonnegative ones
/// index Li^-.
class Composition {
public:
    enum class Polarity { positive, nonnegative };

    Composition() = default;

    static Composition positive(std::vector<std::uint32_t> parts) {
        for (auto p : parts)
            if (p == 0) throw DomainError("positive composition has a zero part");
        return Composition(std::move(parts), Polarity::positive);
    }
    static Composition nonnegative(std::vector<std::uint32_t> parts) {
        return Composition(std::move(parts), Polarity::nonnegative);
    }
    static Composition from_yword(const YWord& y) {
        return y.has_zero_index() ? nonnegative(y.indices) : positive(y.indices);
    }

    const std::vector<std::uint32_t>& parts() const noexcept { return parts_; }
    Polarity polarity() const noexcept { return polarity_; }
    std::size_t depth() const noexcept { return parts_.size(); }
    std::uint64_t weight() const noexcept {
        std::uint64_t w = 0;
        for (auto p : parts_) w += p;
        return w;
    }
    YWord to_yword() const { return YWord(parts_); }
    std::string str() const { return to_yword().str(); }

    friend bool operator==(const Composition& a, const Composition& b) { return a.parts_ == b.parts_; }

private:
    Composition(std::vector<std::uint32_t> parts, Polarity p) : parts_(std::move(parts)), polarity_(p) {}

    std::vector<std::uint32_t> parts_;
    Polarity polarity_ = Polarity::positive;
};

/// Composition (s1,...,sr) of the positive word x0^{s1-1}x1...x0^{sr-1}x1.
/// The word must lie in X*x1 or be empty.
inline Composition composition_of(const Word& w) {
    if (!w.empty() && w.back() != Letter::x1)
        throw DomainError("word " + w.str() + " does not end in x1");
    std::vector<std::uint32_t> parts;
    std::uint32_t run = 1;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (w[i] == Letter::x0) {
            ++run;
        } else {
            parts.push_back(run);
            run = 1;
        }
    }
    return Composition::positive(std::move(parts));
}

} // namespace polystar

template <>
struct std::hash<polystar::Word> {
    std::size_t operator()(const polystar::Word& w) const noexcept {
        std::uint64_t h = w.bits() ^ (std::uint64_t{w.size()} * 0x9E3779B97F4A7C15ull);
        h ^= h >> 33;
        h *= 0xff51afd7ed558ccdull;
        h ^= h >> 33;
        return static_cast<std::size_t>(h);
    }
};
