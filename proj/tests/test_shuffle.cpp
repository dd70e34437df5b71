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

#include <gtest/gtest.h>

#include <atomic>
#include <thread>

#include "oracles.hpp"

using namespace polystar;

namespace {

NCPoly P(std::initializer_list<std::pair<const char*, long>> terms) {
    NCPoly p;
    for (const auto& [w, c] : terms) p.add(Word::parse(w), c);
    return p;
}

YPoly Yp(std::initializer_list<std::pair<std::vector<std::uint32_t>, long>> terms) {
    YPoly p;
    for (const auto& [w, c] : terms) p.add(YWord(w), c);
    return p;
}

YPoly random_ypoly(std::mt19937_64& g, std::uint32_t max_weight) {
    std::uniform_int_distribution<std::uint32_t> part(1, 3);
    YPoly q;
    for (int t = 0; t < 2; ++t) {
        std::vector<std::uint32_t> idx;
        std::uint32_t w = 0;
        for (;;) {
            const auto s = part(g);
            if (w + s > max_weight || std::bernoulli_distribution(0.3)(g)) break;
            idx.push_back(s);
            w += s;
        }
        q.add(YWord(idx), oracle::random_nonzero(g));
    }
    return q;
}

} // namespace

TEST(Conc, Examples) {
    const NCPoly one = constant_poly(1);
    const NCPoly p = P({{"01", 2}, {"1", -1}});
    EXPECT_EQ(conc(one, p), p);
    EXPECT_EQ(conc(word_poly("0"), word_poly("1")), word_poly("01"));
    EXPECT_EQ(conc(P({{"0", 1}, {"1", 1}}), word_poly("1")), P({{"01", 1}, {"11", 1}}));
    EXPECT_EQ(degree(P({{"011", 1}, {"1", 1}})), 3u);
}

TEST(Shuffle, Examples) {
    EXPECT_EQ(shuffle(constant_poly(1), word_poly("011")), word_poly("011"));
    EXPECT_EQ(shuffle(word_poly("0"), word_poly("1")), P({{"01", 1}, {"10", 1}}));
    EXPECT_EQ(shuffle(word_poly("01"), word_poly("0")), P({{"001", 2}, {"010", 1}}));
}

TEST(Shuffle, CountsMatchInterleavingOracle) {
    for (std::size_t total = 0; total <= 7; ++total)
        for (std::size_t lu = 0; lu <= total; ++lu)
            for (const auto& u : oracle::all_words(lu))
                for (const auto& v : oracle::all_words(total - lu)) {
                    NCPoly expected;
                    for (const auto& [w, n] : oracle::shuffle(u, v)) expected.add(Word::parse(w), n);
                    ASSERT_EQ(shuffle(Word::parse(u), Word::parse(v)), expected) << u << " ⧢ " << v;
                }
}

TEST(Shuffle, CommutativeAssociativeUnital) {
    std::mt19937_64 g(1);
    for (int trial = 0; trial < 40; ++trial) {
        const NCPoly a = oracle::random_poly(g, 5, 2), b = oracle::random_poly(g, 5, 2), c = oracle::random_poly(g, 5, 2);
        EXPECT_EQ(shuffle(a, b), shuffle(b, a));
        EXPECT_EQ(shuffle(shuffle(a, b), c), shuffle(a, shuffle(b, c)));
        EXPECT_EQ(shuffle(a, constant_poly(1)), a);
    }
}

TEST(Shuffle, DualToUnshuffle) {
    std::mt19937_64 g(2);
    for (int trial = 0; trial < 20; ++trial) {
        const NCPoly p = oracle::random_poly(g, 3, 4), q = oracle::random_poly(g, 3, 4);
        const NCPoly pq = shuffle(p, q);
        for (std::size_t n = 0; n <= 6; ++n)
            for (const auto& text : oracle::all_words(n)) {
                const Word w = Word::parse(text);
                Rational rhs = 0;
                for (const auto& [uv, c] : unshuffle(w)) rhs += c * p.coeff(uv.first) * q.coeff(uv.second);
                ASSERT_EQ(pq.coeff(w), rhs) << text;
            }
    }
}

TEST(Unshuffle, ExamplesAndOracle) {
    TensorPoly unit;
    unit.add({Word{}, Word{}}, 1);
    EXPECT_EQ(unshuffle(Word{}), unit);
    const Word x0 = Word::parse("0");
    TensorPoly t0;
    t0.add({x0, Word{}}, 1);
    t0.add({Word{}, x0}, 1);
    EXPECT_EQ(unshuffle(x0), t0);
    const auto u01 = unshuffle(Word::parse("01"));
    EXPECT_EQ(u01.size(), 4u);
    EXPECT_EQ(u01.coeff({Word::parse("0"), Word::parse("1")}), 1);
    EXPECT_EQ(u01.coeff({Word::parse("1"), Word::parse("0")}), 1);
    for (std::size_t n = 0; n <= 6; ++n)
        for (const auto& text : oracle::all_words(n)) {
            TensorPoly expected;
            for (const auto& [uv, c] : oracle::unshuffle(text)) expected.add({Word::parse(uv.first), Word::parse(uv.second)}, c);
            ASSERT_EQ(unshuffle(Word::parse(text)), expected) << text;
        }
}

TEST(Stuffle, Examples) {
    const YPoly one = Yp({{{}, 1}});
    const YPoly u = Yp({{{2, 1}, 1}});
    EXPECT_EQ(stuffle(one, u), u);
    EXPECT_EQ(stuffle(Yp({{{1}, 1}}), Yp({{{1}, 1}})), Yp({{{1, 1}, 2}, {{2}, 1}}));
    EXPECT_EQ(stuffle(Yp({{{2}, 1}}), Yp({{{1}, 1}})), Yp({{{2, 1}, 1}, {{1, 2}, 1}, {{3}, 1}}));
    EXPECT_THROW(stuffle(Yp({{{0}, 1}}), one), DomainError);
}

TEST(Stuffle, CommutativeAssociativeUnital) {
    std::mt19937_64 g(3);
    const YPoly one = Yp({{{}, 1}});
    for (int trial = 0; trial < 60; ++trial) {
        const YPoly a = random_ypoly(g, 5), b = random_ypoly(g, 5), c = random_ypoly(g, 5);
        EXPECT_EQ(stuffle(a, b), stuffle(b, a));
        EXPECT_EQ(stuffle(stuffle(a, b), c), stuffle(a, stuffle(b, c)));
        EXPECT_EQ(stuffle(a, one), a);
    }
}

TEST(Residuals, Examples) {
    EXPECT_EQ(left_residual(word_poly("1"), word_poly("01")), word_poly("0"));
    EXPECT_TRUE(left_residual(word_poly("0"), word_poly("01")).is_zero());
    EXPECT_EQ(right_residual(word_poly("01"), word_poly("0")), word_poly("1"));
    EXPECT_TRUE(right_residual(word_poly("01"), word_poly("1")).is_zero());
    const NCPoly s = P({{"011", 2}, {"1", -1}});
    EXPECT_EQ(left_residual(constant_poly(1), s), s);
    EXPECT_EQ(right_residual(s, constant_poly(1)), s);
}

TEST(Residuals, DefiningPairingAndModuleIdentities) {
    std::mt19937_64 g(4);
    for (int trial = 0; trial < 100; ++trial) {
        const NCPoly p = oracle::random_poly(g, 2, 2), q = oracle::random_poly(g, 2, 2), s = oracle::random_poly(g, 6, 8);
        EXPECT_EQ(left_residual(p, left_residual(q, s)), left_residual(conc(p, q), s));
        EXPECT_EQ(right_residual(right_residual(s, p), q), right_residual(s, conc(p, q)));
        EXPECT_EQ(right_residual(left_residual(p, s), q), left_residual(p, right_residual(s, q)));
        for (std::size_t n = 0; n <= 4; ++n)
            for (const auto& text : oracle::all_words(n)) {
                const NCPoly w = word_poly(text);
                EXPECT_EQ(pairing(left_residual(p, s), w), pairing(s, conc(w, p)));
                EXPECT_EQ(pairing(right_residual(s, p), w), pairing(s, conc(p, w)));
            }
    }
}

TEST(Exchangeable, Examples) {
    EXPECT_TRUE(is_exchangeable(P({{"01", 1}, {"10", 1}})));
    EXPECT_FALSE(is_exchangeable(word_poly("01")));
    EXPECT_FALSE(is_exchangeable(P({{"01", 1}, {"10", 2}})));
    EXPECT_TRUE(is_exchangeable(P({{"000", 3}, {"0", -1}, {"", 2}})));
    EXPECT_TRUE(is_exchangeable(shuffle(word_poly("0"), shuffle(word_poly("1"), word_poly("1")))));
}

TEST(ShuffleCache, ConcurrentUseIsConsistent) {
    const Word u = Word::parse("0110"), v = Word::parse("10011");
    const NCPoly expected = shuffle(u, v);
    std::vector<std::thread> threads;
    std::atomic<int> bad{0};
    for (int t = 0; t < 8; ++t)
        threads.emplace_back([&] {
            for (int i = 0; i < 50; ++i)
                if (!(shuffle(u, v) == expected)) ++bad;
        });
    for (auto& th : threads) th.join();
    EXPECT_EQ(bad.load(), 0);
}
