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

#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "polystar/projectors.hpp"
#include "polystar/star_series.hpp"

namespace polystar::cli {

// Grammar, loosest binding first:
//   sum     := shuf (('+' | '-') shuf)*
//   shuf    := conc (('#' | '##') conc)*
//   conc    := scal ('.' scal)*
//   scal    := unary ('*' unary)*          infix '*' only before an operand
//   unary   := '-' unary | postfix
//   postfix := primary '*'*                 '*' not followed by an operand
//   primary := NUMBER | w"01" | y[2,1] | star(a0, a1) | star(sum) | '(' sum ')'
//
// A bare digit string over {0,1} of length >= 2 is a word ("011"), as is any
// {0,1} string right after an infix '*' ("3/2*011 + 1*0"). A single 0 or 1
// directly under a postfix star is the letter ("1*" is x1*).

struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

struct Expr {
    enum class Kind { number, word, yword, plane_star, star, neg, add, sub, mul, conc, shuffle, stuffle, postfix_star };
    Kind kind = Kind::number;
    Rational value;
    Word word;
    YWord yword;
    std::vector<ExprPtr> kids;
    int line = 1;
    int column = 1;

    friend bool same_tree(const Expr& a, const Expr& b) {
        if (a.kind != b.kind || a.value != b.value || a.word != b.word || a.yword != b.yword ||
            a.kids.size() != b.kids.size())
            return false;
        for (std::size_t i = 0; i < a.kids.size(); ++i)
            if (!same_tree(*a.kids[i], *b.kids[i])) return false;
        return true;
    }
};

namespace detail {

struct Token {
    enum class Kind { number, word, yword, ident, symbol, end };
    Kind kind = Kind::end;
    std::string text;
    int line = 1;
    int column = 1;
};

class Lexer {
public:
    explicit Lexer(std::string_view src) : src_(src) {}

    std::vector<Token> run() {
        std::vector<Token> out;
        for (;;) {
            skip_space();
            Token t;
            t.line = line_;
            t.column = col_;
            if (pos_ >= src_.size()) {
                out.push_back(t);
                return out;
            }
            const char c = src_[pos_];
            if (is_digit(c)) {
                t.kind = Token::Kind::number;
                t.text = take_digits();
                if (peek() == '/' && pos_ + 1 < src_.size() && is_digit(src_[pos_ + 1])) {
                    advance();
                    t.text += '/' + take_digits();
                }
            } else if (c == 'w' && peek(1) == '"') {
                advance();
                advance();
                t.kind = Token::Kind::word;
                while (peek() != '"') {
                    if (pos_ >= src_.size()) throw ParseError("unterminated word literal", t.line, t.column);
                    const char d = peek();
                    if (d != '0' && d != '1') throw ParseError(std::string("invalid letter '") + d + "' in word", line_, col_);
                    t.text.push_back(d);
                    advance();
                }
                advance();
            } else if (c == 'y' && peek(1) == '[') {
                advance();
                advance();
                t.kind = Token::Kind::yword;
                while (peek() != ']') {
                    if (pos_ >= src_.size()) throw ParseError("unterminated Y-word literal", t.line, t.column);
                    const char d = peek();
                    if (!is_digit(d) && d != ',' && d != ' ')
                        throw ParseError(std::string("invalid character '") + d + "' in Y-word", line_, col_);
                    t.text.push_back(d);
                    advance();
                }
                advance();
            } else if (is_alpha(c)) {
                t.kind = Token::Kind::ident;
                while (pos_ < src_.size() && is_alpha(src_[pos_])) {
                    t.text.push_back(src_[pos_]);
                    advance();
                }
            } else if (c == '#' && peek(1) == '#') {
                t.kind = Token::Kind::symbol;
                t.text = "##";
                advance();
                advance();
            } else if (std::string_view("+-*.#(),").find(c) != std::string_view::npos) {
                t.kind = Token::Kind::symbol;
                t.text = std::string(1, c);
                advance();
            } else {
                throw ParseError(std::string("unexpected character '") + c + "'", line_, col_);
            }
            out.push_back(std::move(t));
        }
    }

private:
    static bool is_digit(char c) { return c >= '0' && c <= '9'; }
    static bool is_alpha(char c) { return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c == '_'; }
    char peek(std::size_t ahead = 0) const { return pos_ + ahead < src_.size() ? src_[pos_ + ahead] : '\0'; }
    void advance() {
        if (src_[pos_] == '\n') {
            ++line_;
            col_ = 1;
        } else {
            ++col_;
        }
        ++pos_;
    }
    void skip_space() {
        while (pos_ < src_.size() && (src_[pos_] == ' ' || src_[pos_] == '\t' || src_[pos_] == '\n' || src_[pos_] == '\r'))
            advance();
    }
    std::string take_digits() {
        std::string s;
        while (pos_ < src_.size() && is_digit(src_[pos_])) {
            s.push_back(src_[pos_]);
            advance();
        }
        return s;
    }

    std::string_view src_;
    std::size_t pos_ = 0;
    int line_ = 1;
    int col_ = 1;
};

inline bool binary_digits(const std::string& s) { return s.find_first_not_of("01") == std::string::npos; }

class Parser {
public:
    explicit Parser(std::vector<Token> toks) : toks_(std::move(toks)) {}

    ExprPtr parse() {
        auto e = sum();
        if (cur().kind != Token::Kind::end) fail("unexpected '" + cur().text + "'");
        return e;
    }

private:
    const Token& cur() const { return toks_[i_]; }
    const Token& next() const { return toks_[std::min(i_ + 1, toks_.size() - 1)]; }
    bool is_symbol(const Token& t, std::string_view s) const { return t.kind == Token::Kind::symbol && t.text == s; }
    bool operand_start(const Token& t) const {
        return t.kind == Token::Kind::number || t.kind == Token::Kind::word || t.kind == Token::Kind::yword ||
               t.kind == Token::Kind::ident || is_symbol(t, "(");
    }
    [[noreturn]] void fail(const std::string& msg) const {
        const auto& t = cur();
        throw ParseError(t.kind == Token::Kind::end ? msg + " (end of input)" : msg, t.line, t.column);
    }
    void expect(std::string_view s) {
        if (!is_symbol(cur(), s)) fail("expected '" + std::string(s) + "'");
        ++i_;
    }

    static ExprPtr node(Expr::Kind k, const Token& at, std::vector<ExprPtr> kids) {
        auto e = std::make_shared<Expr>();
        e->kind = k;
        e->kids = std::move(kids);
        e->line = at.line;
        e->column = at.column;
        return e;
    }

    ExprPtr sum() {
        auto lhs = shuf();
        while (is_symbol(cur(), "+") || is_symbol(cur(), "-")) {
            const Token op = cur();
            ++i_;
            lhs = node(op.text == "+" ? Expr::Kind::add : Expr::Kind::sub, op, {lhs, shuf()});
        }
        return lhs;
    }
    ExprPtr shuf() {
        auto lhs = conc();
        while (is_symbol(cur(), "#") || is_symbol(cur(), "##")) {
            const Token op = cur();
            ++i_;
            lhs = node(op.text == "#" ? Expr::Kind::shuffle : Expr::Kind::stuffle, op, {lhs, conc()});
        }
        return lhs;
    }
    ExprPtr conc() {
        auto lhs = scal();
        while (is_symbol(cur(), ".")) {
            const Token op = cur();
            ++i_;
            lhs = node(Expr::Kind::conc, op, {lhs, scal()});
        }
        return lhs;
    }
    ExprPtr scal() {
        auto lhs = unary(false);
        while (is_symbol(cur(), "*") && operand_start(next())) {
            const Token op = cur();
            ++i_;
            lhs = node(Expr::Kind::mul, op, {lhs, unary(true)});
        }
        return lhs;
    }
    ExprPtr unary(bool after_times) {
        if (is_symbol(cur(), "-")) {
            const Token op = cur();
            ++i_;
            return node(Expr::Kind::neg, op, {unary(after_times)});
        }
        return postfix(after_times);
    }
    ExprPtr postfix(bool after_times) {
        const bool letter = cur().kind == Token::Kind::number && (cur().text == "0" || cur().text == "1") &&
                            is_symbol(next(), "*") && !operand_start(toks_[std::min(i_ + 2, toks_.size() - 1)]);
        auto e = primary(after_times || letter);
        while (is_symbol(cur(), "*") && !operand_start(next())) {
            const Token op = cur();
            ++i_;
            e = node(Expr::Kind::postfix_star, op, {e});
        }
        return e;
    }
    ExprPtr primary(bool digits_are_word) {
        const Token t = cur();
        auto e = std::make_shared<Expr>();
        e->line = t.line;
        e->column = t.column;
        switch (t.kind) {
        case Token::Kind::number:
            ++i_;
            if (binary_digits(t.text) && (digits_are_word || t.text.size() >= 2)) {
                e->kind = Expr::Kind::word;
                e->word = Word::parse(t.text);
            } else {
                e->kind = Expr::Kind::number;
                e->value = parse_rational(t.text);
            }
            return e;
        case Token::Kind::word:
            ++i_;
            e->kind = Expr::Kind::word;
            e->word = Word::parse(t.text);
            return e;
        case Token::Kind::yword:
            ++i_;
            e->kind = Expr::Kind::yword;
            try {
                e->yword = YWord::parse(t.text);
            } catch (const DomainError& err) {
                throw ParseError(err.what(), t.line, t.column);
            }
            return e;
        case Token::Kind::ident: {
            if (t.text != "star") fail("unknown identifier '" + t.text + "'");
            ++i_;
            expect("(");
            auto first = sum();
            if (is_symbol(cur(), ",")) {
                ++i_;
                auto second = sum();
                expect(")");
                return node(Expr::Kind::plane_star, t, {first, second});
            }
            expect(")");
            return node(Expr::Kind::star, t, {first});
        }
        case Token::Kind::symbol:
            if (t.text == "(") {
                ++i_;
                auto inner = sum();
                expect(")");
                return inner;
            }
            fail("unexpected '" + t.text + "'");
        case Token::Kind::end:
            fail("expected an operand");
        }
        fail("unexpected token");
    }

    std::vector<Token> toks_;
    std::size_t i_ = 0;
};

} // namespace detail

inline ExprPtr parse_expr(std::string_view text) {
    return detail::Parser(detail::Lexer(text).run()).parse();
}

/// Fully parenthesized rendering; parse_expr(pretty_print(e)) rebuilds e.
inline std::string pretty_print(const Expr& e) {
    auto bin = [&](const char* op) {
        return "(" + pretty_print(*e.kids[0]) + " " + op + " " + pretty_print(*e.kids[1]) + ")";
    };
    switch (e.kind) {
    case Expr::Kind::number: {
        std::string s = e.value.get_str();
        if (e.value.get_den() == 1 && detail::binary_digits(s)) s += "/1";
        return "(" + s + ")";
    }
    case Expr::Kind::word: return "w\"" + e.word.str() + "\"";
    case Expr::Kind::yword: return "y[" + e.yword.str() + "]";
    case Expr::Kind::plane_star: return "star(" + pretty_print(*e.kids[0]) + ", " + pretty_print(*e.kids[1]) + ")";
    case Expr::Kind::star: return "star(" + pretty_print(*e.kids[0]) + ")";
    case Expr::Kind::neg: return "(-" + pretty_print(*e.kids[0]) + ")";
    case Expr::Kind::add: return bin("+");
    case Expr::Kind::sub: return bin("-");
    case Expr::Kind::mul: return bin("*");
    case Expr::Kind::conc: return bin(".");
    case Expr::Kind::shuffle: return bin("#");
    case Expr::Kind::stuffle: return bin("##");
    case Expr::Kind::postfix_star: return "(" + pretty_print(*e.kids[0]) + "*)";
    }
    return "?";
}

/// Result of elaborating an expression: a scalar, an element of the star
/// algebra over X, or a polynomial over Y.
struct Value {
    enum class Kind { scalar, x, y };
    Kind kind = Kind::scalar;
    Rational scalar = 0;
    StarSeries x;
    YPoly y;

    static Value of(const Rational& c) { return Value{Kind::scalar, c, {}, {}}; }
    static Value of(StarSeries s) { return Value{Kind::x, 0, std::move(s), {}}; }
    static Value of(YPoly p) { return Value{Kind::y, 0, {}, std::move(p)}; }

    StarSeries as_x() const {
        if (kind == Kind::scalar) return star_constant(scalar);
        if (kind == Kind::x) return x;
        throw TypeError("expected an X-expression, got a Y-expression");
    }
    YPoly as_y() const {
        if (kind == Kind::scalar) return YPoly(YWord{}, scalar);
        if (kind == Kind::y) return y;
        throw TypeError("expected a Y-expression, got an X-expression");
    }
};

namespace detail {

inline std::string where(const Expr& e) {
    return " in '" + pretty_print(e) + "' (line " + std::to_string(e.line) + ", column " + std::to_string(e.column) + ")";
}

inline Value scale(const Value& v, const Rational& c) {
    switch (v.kind) {
    case Value::Kind::scalar: return Value::of(Rational(v.scalar * c));
    case Value::Kind::x: return Value::of(v.x * c);
    case Value::Kind::y: return Value::of(v.y * c);
    }
    return v;
}

inline Value add(const Value& a, const Value& b, const Rational& sign, const Expr& e) {
    if (a.kind == Value::Kind::scalar && b.kind == Value::Kind::scalar) return Value::of(Rational(a.scalar + sign * b.scalar));
    if (a.kind == Value::Kind::y || b.kind == Value::Kind::y) {
        if (a.kind == Value::Kind::x || b.kind == Value::Kind::x) throw TypeError("cannot add X- and Y-expressions" + where(e));
        YPoly r = a.as_y();
        r.add_scaled(b.as_y(), sign);
        return Value::of(std::move(r));
    }
    StarSeries r = a.as_x();
    r.add_scaled(b.as_x(), sign);
    return Value::of(std::move(r));
}

/// Kleene star of a plane element; anything else is a type error.
inline StarSeries kleene(const StarSeries& s, const Expr& e) {
    for (const auto& [t, c] : s)
        if (!t.is_polynomial() || t.w.size() > 1) throw TypeError("star of a non-plane element" + where(e));
    return star(s);
}

} // namespace detail

inline Value elaborate(const Expr& e) {
    using K = Expr::Kind;
    auto sub = [&](std::size_t i) { return elaborate(*e.kids[i]); };
    switch (e.kind) {
    case K::number: return Value::of(e.value);
    case K::word: return Value::of(embed(word_poly(e.word)));
    case K::yword: return Value::of(YPoly(e.yword, 1));
    case K::plane_star: {
        const Value a0 = sub(0), a1 = sub(1);
        if (a0.kind != Value::Kind::scalar || a1.kind != Value::Kind::scalar)
            throw TypeError("star parameters must be rational numbers" + detail::where(e));
        return Value::of(plane_star(a0.scalar, a1.scalar));
    }
    case K::star:
    case K::postfix_star: return Value::of(detail::kleene(sub(0).as_x(), e));
    case K::neg: return detail::scale(sub(0), -1);
    case K::add: return detail::add(sub(0), sub(1), 1, e);
    case K::sub: return detail::add(sub(0), sub(1), -1, e);
    case K::mul:
    case K::conc: {
        const Value a = sub(0), b = sub(1);
        if (a.kind == Value::Kind::scalar) return detail::scale(b, a.scalar);
        if (b.kind == Value::Kind::scalar) return detail::scale(a, b.scalar);
        if (e.kind == K::mul) throw TypeError("'*' needs a scalar operand; use '.' or '#'" + detail::where(e));
        if (a.kind != b.kind) throw TypeError("cannot concatenate X- and Y-expressions" + detail::where(e));
        if (a.kind == Value::Kind::y) return Value::of(conc(a.y, b.y));
        if (!is_polynomial(a.x) || !is_polynomial(b.x))
            throw DomainError("concatenation is only defined on polynomials" + detail::where(e));
        return Value::of(embed(conc(polynomial_part(a.x), polynomial_part(b.x))));
    }
    case K::shuffle: {
        const Value a = sub(0), b = sub(1);
        if (a.kind == Value::Kind::y || b.kind == Value::Kind::y)
            throw TypeError("'#' applies to X-expressions; use '##' on Y" + detail::where(e));
        if (a.kind == Value::Kind::scalar && b.kind == Value::Kind::scalar) return Value::of(Rational(a.scalar * b.scalar));
        return Value::of(shuffle_star(a.as_x(), b.as_x()));
    }
    case K::stuffle: {
        const Value a = sub(0), b = sub(1);
        if (a.kind == Value::Kind::x || b.kind == Value::Kind::x)
            throw TypeError("'##' applies to Y-expressions" + detail::where(e));
        if (a.kind == Value::Kind::scalar && b.kind == Value::Kind::scalar) return Value::of(Rational(a.scalar * b.scalar));
        return Value::of(stuffle(a.as_y(), b.as_y()));
    }
    }
    throw TypeError("unknown expression node");
}

inline Value evaluate_text(std::string_view text) { return elaborate(*parse_expr(text)); }

} // namespace polystar::cli
