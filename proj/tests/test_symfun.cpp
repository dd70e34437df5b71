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

#include "oracles.hpp"

using namespace polystar;

namespace {

SymFun mono(long k, long l, const char* w, const Rational& c = 1) { return sym_monomial(k, l, Word::parse(w), c); }

SymFun random_symfun(std::mt19937_64& g) {
    std::uniform_int_distribution<long> kd(-2, 2), ld(0, 2);
    SymFun f;
    for (int t = 0; t < 3; ++t) f.add_scaled(sym_monomial(kd(g), ld(g), oracle::random_word(g, 3)), oracle::random_nonzero(g));
    return f;
}

Complex value(const SymFun& f, double z) {
    EvalParams p;
    p.z = Complex(z, 0.0);
    return evaluate(f, p);
}

} // namespace

TEST(SymFun, PartialFractionsAreExact) {
    for (long k = -3; k <= 3; ++k)
        for (long l = -2; l <= 3; ++l) {
            const SymFun f = mono(k, l, "");
            for (const auto& [key, c] : f) EXPECT_TRUE(key.k == 0 || key.l == 0);
            for (double z : {0.2, 0.6}) EXPECT_NEAR(value(f, z).real(), std::pow(z, k) * std::pow(1 - z, -l), 1e-12);
        }
}

TEST(SymFun, ProductIsPointwise) {
    std::mt19937_64 g(40);
    for (int trial = 0; trial < 20; ++trial) {
        const SymFun f = random_symfun(g), h = random_symfun(g);
        for (double z : {0.3, 0.7})
            EXPECT_LT(std::abs(value(product(f, h), z) - value(f, z) * value(h, z)), 1e-9);
    }
}

TEST(Theta, Examples) {
    EXPECT_EQ(theta(Letter::x0, sym_li(Word::parse("01"))), sym_li(Word::parse("1")));
    EXPECT_EQ(theta(Letter::x1, sym_li(Word::parse("1"))), sym_one());
    SymFun sum = theta(Letter::x0, sym_lambda());
    sum += theta(Letter::x1, sym_lambda());
    EXPECT_EQ(sum, mono(0, 2, ""));
}

TEST(Theta, DerivativeMatchesFiniteDifference) {
    std::mt19937_64 g(41);
    for (int trial = 0; trial < 20; ++trial) {
        const SymFun f = random_symfun(g);
        const double z = 0.4, h = 1e-5;
        const double fd = (value(f, z + h) - value(f, z - h)).real() / (2 * h);
        EXPECT_NEAR(value(derivative(f), z).real(), fd, 1e-5 * (1 + std::abs(fd)));
    }
}

TEST(Theta, CommutatorIsDerivative) {
    std::mt19937_64 g(42);
    for (int trial = 0; trial < 50; ++trial) {
        const SymFun f = random_symfun(g);
        SymFun comm = theta(Letter::x1, theta(Letter::x0, f));
        comm -= theta(Letter::x0, theta(Letter::x1, f));
        SymFun sum = theta(Letter::x0, f);
        sum += theta(Letter::x1, f);
        EXPECT_EQ(comm, sum);
        EXPECT_EQ(sum, derivative(f));
    }
}

TEST(Index, Examples) {
    EXPECT_EQ(index_of(SymKey{2, 0, Word::parse("000")}), 2);
    EXPECT_EQ(index_of(SymKey{0, 0, Word::parse("1")}), 1);
    EXPECT_EQ(index_of(SymKey{-1, 0, Word::parse("0")}), -1);
    EXPECT_EQ(index_of(SymKey{0, 3, Word::parse("011")}), 3);
    EXPECT_THROW(index_of(SymKey{0, 0, Word::parse("10")}), DomainError);
    EXPECT_THROW(index_of(ReducedMonomial{1, 1, Word{}, 0}), DomainError);
}

TEST(Iota, Examples) {
    EXPECT_EQ(iota(Letter::x1, sym_one()), sym_li(Word::parse("1")));
    for (unsigned m = 0; m <= 5; ++m) {
        EXPECT_EQ(iota(Letter::x0, sym_log_power(m)), sym_log_power(m + 1));
        if (m >= 1) EXPECT_EQ(iota(Letter::x0, sym_li(Word::power(Letter::x1, m))), sym_li(Word::power(Letter::x1, m).prepended(Letter::x0)));
    }
    EXPECT_EQ(apply_word_op(WordOpKind::Iota, Word::parse("01"), sym_one()), sym_li(Word::parse("01")));
    const std::vector<OperatorStep> ops{OperatorStep::theta0, OperatorStep::iota1};
    EXPECT_EQ(apply_operators(ops, sym_one()), sym_lambda());
    EXPECT_EQ(apply_operators(neg_index_operator_word(Composition::nonnegative({0})), sym_one()), sym_lambda());
}

TEST(Iota, IteratedIntegralsGiveLi) {
    // Li_w = ℑ(w) 1 for w ∈ X*x1 and for powers of x0.
    for (std::size_t n = 1; n <= 6; ++n)
        for (const auto& text : oracle::all_words(n)) {
            const Word w = Word::parse(text);
            if (w.back() != Letter::x1 && w.ones() != 0) continue;
            EXPECT_EQ(apply_word_op(WordOpKind::Iota, w, sym_one()), sym_li(w)) << text;
        }
}

TEST(Iota, SectionsOnSupportedMonomials) {
    std::mt19937_64 g(43);
    std::uniform_int_distribution<long> kd(-2, 3), ld(0, 3);
    int checked = 0;
    for (int trial = 0; checked < 100 && trial < 2000; ++trial) {
        const Letter x = trial % 2 ? Letter::x1 : Letter::x0;
        const SymFun f = mono(kd(g), ld(g), oracle::random_word(g, 3).str().c_str(), oracle::random_nonzero(g));
        SymFun F;
        try {
            F = iota(x, f);
        } catch (const DomainError&) {
            continue;
        }
        EXPECT_EQ(theta(x, F), f);
        ++checked;
    }
    EXPECT_EQ(checked, 100);
}

TEST(Iota, EigenOperators) {
    std::mt19937_64 g(44);
    int checked = 0;
    for (int trial = 0; trial < 50; ++trial) {
        const SymFun f = sym_li(oracle::random_word(g, 4)) * oracle::random_nonzero(g);
        EXPECT_EQ(theta(Letter::x0, iota(Letter::x1, f)), product(sym_lambda(), f));
        try {
            EXPECT_EQ(theta(Letter::x1, iota(Letter::x0, f)), product(sym_inv_lambda(), f));
            ++checked;
        } catch (const DomainError&) {
        }
    }
    EXPECT_GT(checked, 25);
}

TEST(Iota, BasepointLimits) {
    EXPECT_EQ(limit_at_zero(sym_li(Word::parse("011"))).value, 0);
    EXPECT_EQ(limit_at_zero(mono(-1, 0, "1")).value, 1);
    EXPECT_EQ(limit_at_zero(mono(0, 0, "0")).kind, Limit::Kind::divergent);
    EXPECT_EQ(limit_at_one(mono(0, 0, "0")).value, 0);
    EXPECT_EQ(limit_at_one(mono(0, 1, "")).kind, Limit::Kind::divergent);
    // (1−z)·log(1−z) → 0
    EXPECT_EQ(limit_at_one(mono(0, -1, "1")).value, 0);
    EXPECT_EQ(limit_at_one(sym_li(Word::parse("01"))).kind, Limit::Kind::non_elementary);
}

TEST(Iota, NonElementaryConstant) {
    // z^{-2}·Li_{x0x1} has index 0: ι0 integrates from 1, where ζ(2) appears.
    const SymFun f = mono(-2, 0, "01");
    try {
        iota(Letter::x0, f);
        FAIL() << "expected a non-elementary constant";
    } catch (const DomainError& e) {
        EXPECT_NE(std::string(e.what()).find("non-elementary"), std::string::npos);
    }
    const NumericIota r = iota_numeric(Letter::x0, f);
    EXPECT_EQ(theta(Letter::x0, r.symbolic), f);
    EXPECT_LT(std::abs(value(r.symbolic, 0.999) + r.constant), 5e-3);
    EXPECT_GT(std::abs(r.constant), 0.1);
}

TEST(Iota, GeneralizedLeibniz) {
    std::mt19937_64 g(45);
    for (std::size_t n = 0; n <= 3; ++n)
        for (const auto& text : oracle::all_words(n)) {
            const Word u = Word::parse(text);
            const SymFun f = random_symfun(g), h = random_symfun(g);
            SymFun rhs;
            for (const auto& [uv, c] : unshuffle(u))
                rhs.add_scaled(product(apply_word_op(WordOpKind::Theta, uv.first, f), apply_word_op(WordOpKind::Theta, uv.second, h)), c);
            EXPECT_EQ(apply_word_op(WordOpKind::Theta, u, product(f, h)), rhs) << text;
        }
}

TEST(Discontinuity, ReproducesBothLimits) {
    const auto rep = discontinuity_demo(40, 0.5);
    EXPECT_NEAR(rep.limit_iota_f, -0.5, 1e-6);
    EXPECT_NEAR(rep.limit_iota_g, 0.5, 1e-6);
    EXPECT_NEAR(rep.rows.back().f, 0.5, 1e-9);
    EXPECT_NEAR(rep.rows.back().g, 0.5, 1e-9);
    EXPECT_EQ(iota(Letter::x0, discontinuity_f(4)) + sym_one(), discontinuity_f(5));
    EXPECT_THROW(discontinuity_demo(40, 1.5), DomainError);
}
