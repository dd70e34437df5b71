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

#include <algorithm>
#include <numeric>
#include <cstdio>
#include <optional>
#include <ostream>
#include <random>
#include <string>
#include <vector>

#include "json.hpp"
#include "polystar/cli/parser.hpp"
#include "polystar/lyndon.hpp"
#include "polystar/polylog/discontinuity.hpp"
#include "polystar/polylog/lineg.hpp"
#include "polystar/rewrite.hpp"

namespace polystar::cli {

enum class Format { text, json, csv };

struct Command {
    std::string verb;
    std::vector<std::string> args;
    Format format = Format::text;
    Complex z{0.5, 0.0};
    double eps = 1e-15;
    std::string route = "rec";
    std::optional<std::uint64_t> seed;
    std::optional<std::uint64_t> n;
    bool factor = false;
};

inline constexpr int exit_ok = 0;
inline constexpr int exit_usage = 1;
inline constexpr int exit_parse = 2;
inline constexpr int exit_type = 3;
inline constexpr int exit_numeric = 4;
inline constexpr int exit_domain = 5;

using Json = nlohmann::json;

namespace detail {

class UsageError : public Error {
public:
    using Error::Error;
};

inline void need_args(const Command& c, std::size_t k, const char* usage) {
    if (c.args.size() != k) throw UsageError(std::string("usage: ") + usage);
}

inline std::uint64_t parse_count(const std::string& s, const char* what) {
    if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos || s.size() > 18)
        throw UsageError(std::string(what) + " must be a nonnegative integer, got '" + s + "'");
    return std::stoull(s);
}

inline Composition parse_composition(const std::string& s, bool allow_zero) {
    YWord y;
    try {
        y = YWord::parse(s);
    } catch (const std::exception&) {
        throw UsageError("composition must be comma-separated nonnegative integers, got '" + s + "'");
    }
    if (!allow_zero && y.has_zero_index()) throw DomainError("composition " + s + " has a zero part");
    return allow_zero ? Composition::nonnegative(y.indices) : Composition::positive(y.indices);
}

inline std::string fmt_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

inline std::string fmt_complex(const Complex& c) {
    if (c.imag() == 0.0) return fmt_double(c.real());
    char buf[96];
    std::snprintf(buf, sizeof buf, "%.17g%+.17gi", c.real(), c.imag());
    return buf;
}

inline Json json_rational(const Rational& q) {
    if (is_integer(q) && fits_int64(q.get_num())) return Json(static_cast<std::int64_t>(q.get_num().get_si()));
    return Json(q.get_str());
}

inline std::string term_text(const Rational& c, const std::string& body, bool first) {
    const bool neg = sgn(c) < 0;
    const Rational mag = neg ? Rational(-c) : c;
    std::string s = first ? (neg ? "-" : "") : (neg ? " - " : " + ");
    if (body.empty()) return s + mag.get_str();
    return s + mag.get_str() + "*" + body;
}

inline std::string star_body(const StarTerm& t) {
    std::string body;
    if (!t.w.empty() || t.is_polynomial()) body = t.w.empty() ? "" : "w\"" + t.w.str() + "\"";
    if (!t.is_polynomial()) {
        const std::string st = "star(" + t.a0.get_str() + "," + t.a1.get_str() + ")";
        body = body.empty() ? st : body + " # " + st;
    }
    return body;
}

} // namespace detail

/// Canonical text form: terms in (word, a0, a1) order, e.g. 3/2*w"01" # star(1,0).
inline std::string format_series(const StarSeries& s) {
    if (s.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [t, c] : s) {
        out += detail::term_text(c, detail::star_body(t), first);
        first = false;
    }
    return out;
}

inline std::string format_ypoly(const YPoly& p) {
    if (p.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [y, c] : p) {
        out += detail::term_text(c, y.empty() ? "" : "y[" + y.str() + "]", first);
        first = false;
    }
    return out;
}

inline Json json_series(const StarSeries& s) {
    Json terms = Json::array();
    for (const auto& [t, c] : s)
        terms.push_back({{"coeff", c.get_str()}, {"word", t.w.str()}, {"a0", t.a0.get_str()}, {"a1", t.a1.get_str()}});
    return terms;
}

inline Json json_ypoly(const YPoly& p) {
    Json terms = Json::array();
    for (const auto& [y, c] : p) terms.push_back({{"coeff", c.get_str()}, {"yword", y.str()}});
    return terms;
}

namespace detail {

inline void emit_value(const Command& cmd, const Value& v, std::ostream& out, Json extra = Json::object()) {
    switch (cmd.format) {
    case Format::text:
        if (v.kind == Value::Kind::scalar) out << v.scalar.get_str() << '\n';
        else if (v.kind == Value::Kind::x) out << format_series(v.x) << '\n';
        else out << format_ypoly(v.y) << '\n';
        break;
    case Format::json: {
        Json j = std::move(extra);
        j["schema"] = 1;
        if (v.kind == Value::Kind::scalar) {
            j["kind"] = "scalar";
            j["value"] = v.scalar.get_str();
        } else if (v.kind == Value::Kind::x) {
            j["kind"] = "x";
            j["terms"] = json_series(v.x);
        } else {
            j["kind"] = "y";
            j["terms"] = json_ypoly(v.y);
        }
        out << j.dump() << '\n';
        break;
    }
    case Format::csv:
        if (v.kind == Value::Kind::y) {
            out << "coeff,yword\n";
            for (const auto& [y, c] : v.y) out << c.get_str() << ',' << y.str() << '\n';
        } else {
            out << "coeff,word,a0,a1\n";
            for (const auto& [t, c] : v.as_x()) out << c.get_str() << ',' << t.w.str() << ',' << t.a0.get_str() << ',' << t.a1.get_str() << '\n';
        }
        break;
    }
}

inline void emit_scalar(const Command& cmd, const std::string& key, const Rational& q, std::ostream& out, Json extra) {
    switch (cmd.format) {
    case Format::text: out << q.get_str() << '\n'; break;
    case Format::json:
        extra["schema"] = 1;
        extra[key] = q.get_str();
        extra["approx"] = q.get_d();
        out << extra.dump() << '\n';
        break;
    case Format::csv: out << key << '\n' << q.get_str() << '\n'; break;
    }
}

inline void emit_denpoly(const Command& cmd, const DenPoly& p, std::ostream& out) {
    switch (cmd.format) {
    case Format::text: out << p.str() << '\n'; break;
    case Format::json: {
        Json powers = Json::array();
        for (const auto& c : p.coeffs) powers.push_back(json_rational(c));
        out << Json{{"schema", 1}, {"den_powers", powers}}.dump() << '\n';
        break;
    }
    case Format::csv:
        out << "j,coeff\n";
        for (std::size_t j = 0; j < p.coeffs.size(); ++j) out << j << ',' << p.coeffs[j].get_str() << '\n';
        break;
    }
}

/// Nonnegative compositions with 1 <= depth <= B and weight + depth <= B + 1,
/// ordered by depth, weight, then reverse lexicographic parts.
inline std::vector<Composition> lineg_table_compositions(unsigned B) {
    std::vector<std::vector<std::uint32_t>> all;
    std::vector<std::uint32_t> cur;
    auto rec = [&](auto&& self, unsigned depth_left, unsigned budget) -> void {
        if (!cur.empty()) all.push_back(cur);
        if (depth_left == 0) return;
        for (unsigned s = 0; s + 1 <= budget; ++s) {
            cur.push_back(s);
            self(self, depth_left - 1, budget - s - 1);
            cur.pop_back();
        }
    };
    rec(rec, B, B + 1);
    std::sort(all.begin(), all.end(), [](const auto& a, const auto& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        const auto wa = std::accumulate(a.begin(), a.end(), 0u), wb = std::accumulate(b.begin(), b.end(), 0u);
        if (wa != wb) return wa < wb;
        return a > b;
    });
    std::vector<Composition> out;
    for (auto& v : all) out.push_back(Composition::nonnegative(v));
    return out;
}

/// Positive compositions of weight <= B (including the empty one), ordered by
/// weight, depth, then reverse lexicographic parts.
inline std::vector<Composition> hsum_table_compositions(unsigned B) {
    std::vector<std::vector<std::uint32_t>> all;
    std::vector<std::uint32_t> cur;
    auto rec = [&](auto&& self, unsigned budget) -> void {
        all.push_back(cur);
        for (unsigned s = 1; s <= budget; ++s) {
            cur.push_back(s);
            self(self, budget - s);
            cur.pop_back();
        }
    };
    rec(rec, B);
    std::sort(all.begin(), all.end(), [](const auto& a, const auto& b) {
        const auto wa = std::accumulate(a.begin(), a.end(), 0u), wb = std::accumulate(b.begin(), b.end(), 0u);
        if (wa != wb) return wa < wb;
        if (a.size() != b.size()) return a.size() < b.size();
        return a > b;
    });
    std::vector<Composition> out;
    for (auto& v : all) out.push_back(Composition::positive(v));
    return out;
}

inline bool lineg_verified(const Composition& s, const DenPoly& p) {
    for (auto r : {NegRoute::T, NegRoute::R, NegRoute::F})
        if (!(li_neg_closed_form(s, r) == p)) return false;
    for (std::uint64_t N = 1; N <= 20; ++N)
        if (p.taylor_coefficient(N) != neg_taylor_coeff(s, N)) return false;
    return true;
}

inline std::string paren(const Composition& s) { return "(" + s.str() + ")"; }

inline int run_table(const Command& cmd, std::ostream& out) {
    need_args(cmd, 2, "table lineg|hsum|lyndon <bound>");
    const std::string& kind = cmd.args[0];
    const auto B = static_cast<unsigned>(parse_count(cmd.args[1], "bound"));
    Json rows = Json::array();
    if (kind == "lyndon") {
        if (B > 24) throw DomainError("table lyndon: bound must be at most 24");
        if (cmd.format == Format::csv) out << "length,word\n";
        for (const auto& w : lyndon_up_to(B)) {
            if (cmd.format == Format::text) out << w.size() << ' ' << w.str() << '\n';
            else if (cmd.format == Format::csv) out << w.size() << ',' << w.str() << '\n';
            else rows.push_back({{"length", w.size()}, {"word", w.str()}});
        }
    } else if (kind == "lineg") {
        if (cmd.format == Format::csv) out << "composition,closed_form,verified\n";
        for (const auto& s : lineg_table_compositions(B)) {
            const DenPoly p = li_neg_closed_form(s, NegRoute::recursion);
            const bool ok = lineg_verified(s, p);
            const char* flag = ok ? "verified" : "MISMATCH";
            if (cmd.format == Format::text) out << paren(s) << '\t' << p.str() << '\t' << flag << '\n';
            else if (cmd.format == Format::csv) out << '"' << s.str() << "\"," << p.str() << ',' << flag << '\n';
            else {
                Json powers = Json::array();
                for (const auto& c : p.coeffs) powers.push_back(json_rational(c));
                rows.push_back({{"composition", s.parts()}, {"den_powers", powers}, {"verified", ok}});
            }
        }
    } else if (kind == "hsum") {
        const std::uint64_t N = cmd.n.value_or(10);
        if (cmd.format == Format::csv) out << "composition,N,value\n";
        for (const auto& s : hsum_table_compositions(B)) {
            const Rational h = harmonic_sum(s, N);
            if (cmd.format == Format::text) out << "H" << paren(s) << "(" << N << ")\t" << h.get_str() << '\n';
            else if (cmd.format == Format::csv) out << '"' << s.str() << "\"," << N << ',' << h.get_str() << '\n';
            else rows.push_back({{"composition", s.parts()}, {"N", N}, {"value", h.get_str()}});
        }
    } else {
        throw UsageError("table kind must be lineg, hsum or lyndon");
    }
    if (cmd.format == Format::json) out << Json{{"schema", 1}, {"kind", kind}, {"rows", rows}}.dump() << '\n';
    return exit_ok;
}

inline int run_verb(const Command& cmd, std::ostream& out) {
    const std::string& v = cmd.verb;
    EvalParams params;
    params.z = cmd.z;
    params.eps = cmd.eps;

    if (v == "lyndon") {
        need_args(cmd, 1, cmd.factor ? "lyndon --factor <word>" : "lyndon <max-length>");
        std::vector<Word> words;
        if (cmd.factor) {
            const auto& a = cmd.args[0];
            if (a.find_first_not_of("01") != std::string::npos) throw UsageError("word must be a string over {0,1}");
            words = clf_factorize(Word::parse(a));
        } else {
            const auto n = parse_count(cmd.args[0], "max-length");
            if (n > 24) throw DomainError("lyndon: max-length must be at most 24");
            words = lyndon_up_to(n);
        }
        if (cmd.format == Format::json) {
            Json arr = Json::array();
            for (const auto& w : words) arr.push_back(w.str());
            out << Json{{"schema", 1}, {cmd.factor ? "factors" : "words", arr}}.dump() << '\n';
        } else {
            if (cmd.format == Format::csv) out << "word\n";
            for (const auto& w : words) out << w.str() << '\n';
        }
        return exit_ok;
    }
    if (v == "shuffle" || v == "stuffle") {
        need_args(cmd, 2, v == "shuffle" ? "shuffle <expr> <expr>" : "stuffle <expr> <expr>");
        const Value a = evaluate_text(cmd.args[0]), b = evaluate_text(cmd.args[1]);
        if (v == "shuffle") emit_value(cmd, Value::of(shuffle_star(a.as_x(), b.as_x())), out);
        else emit_value(cmd, Value::of(stuffle(a.as_y(), b.as_y())), out);
        return exit_ok;
    }
    if (v == "nf" || v == "kernel") {
        need_args(cmd, 1, v == "nf" ? "nf <expr>" : "kernel <expr>");
        const StarSeries s = evaluate_text(cmd.args[0]).as_x();
        RewriteStats stats;
        std::mt19937_64 rng(cmd.seed.value_or(0));
        const auto strategy = cmd.seed ? RewriteStrategy::random : RewriteStrategy::largest_measure_first;
        const StarSeries nf = normal_form(s, strategy, &rng, &stats);
        if (v == "nf") {
            emit_value(cmd, Value::of(nf), out, Json{{"steps", stats.steps}});
        } else if (cmd.format == Format::json) {
            out << Json{{"schema", 1}, {"kernel", nf.is_zero()}}.dump() << '\n';
        } else {
            out << (nf.is_zero() ? "true" : "false") << '\n';
        }
        return exit_ok;
    }
    if (v == "eval") {
        need_args(cmd, 1, "eval <expr> [--z re,im] [--eps e]");
        const Value val = evaluate_text(cmd.args[0]);
        Complex r;
        if (val.kind == Value::Kind::y) r = eval_li_poly(pi_X(val.y), params);
        else r = eval_li2(val.as_x(), params);
        if (cmd.format == Format::json)
            out << Json{{"schema", 1}, {"re", r.real()}, {"im", r.imag()}}.dump() << '\n';
        else if (cmd.format == Format::csv)
            out << "re,im\n" << fmt_double(r.real()) << ',' << fmt_double(r.imag()) << '\n';
        else
            out << fmt_complex(r) << '\n';
        return exit_ok;
    }
    if (v == "lineg") {
        need_args(cmd, 1, "lineg <s1,...,sr> [--route T|R|F|rec]");
        emit_denpoly(cmd, li_neg_closed_form(parse_composition(cmd.args[0], true), parse_neg_route(cmd.route)), out);
        return exit_ok;
    }
    if (v == "hsum") {
        need_args(cmd, 2, "hsum <s1,...,sr> <N>");
        const auto s = parse_composition(cmd.args[0], false);
        const auto N = parse_count(cmd.args[1], "N");
        emit_scalar(cmd, "value", harmonic_sum(s, N), out, Json{{"composition", s.parts()}, {"N", N}});
        return exit_ok;
    }
    if (v == "taylor-neg") {
        need_args(cmd, 2, "taylor-neg <s1,...,sr> <N>");
        const auto s = parse_composition(cmd.args[0], true);
        const auto N = parse_count(cmd.args[1], "N");
        if (N == 0) throw DomainError("taylor-neg: N must be positive");
        emit_scalar(cmd, "value", neg_taylor_coeff(s, N), out, Json{{"composition", s.parts()}, {"N", N}});
        return exit_ok;
    }
    if (v == "table") return run_table(cmd, out);
    if (v == "demo-discontinuity") {
        need_args(cmd, 0, "demo-discontinuity [--z x] [--n n]");
        if (cmd.z.imag() != 0.0) throw DomainError("demo-discontinuity needs a real z");
        const auto rep = discontinuity_demo(static_cast<unsigned>(cmd.n.value_or(40)), cmd.z.real(), cmd.eps);
        if (cmd.format == Format::json) {
            Json rows = Json::array();
            for (const auto& r : rep.rows)
                rows.push_back({{"n", r.n}, {"f", r.f}, {"iota_f", r.iota_f}, {"g", r.g}, {"iota_g", r.iota_g}});
            out << Json{{"schema", 1}, {"z", rep.z}, {"rows", rows}, {"limit_iota_f", rep.limit_iota_f},
                        {"limit_iota_g", rep.limit_iota_g}}
                       .dump()
                << '\n';
        } else {
            const char sep = cmd.format == Format::csv ? ',' : '\t';
            out << "n" << sep << "f_n" << sep << "iota0_f_n" << sep << "g_n" << sep << "iota0_g_n" << '\n';
            for (const auto& r : rep.rows)
                out << r.n << sep << fmt_double(r.f) << sep << fmt_double(r.iota_f) << sep << fmt_double(r.g) << sep
                    << fmt_double(r.iota_g) << '\n';
            if (cmd.format == Format::text)
                out << "limit iota0(f_n) = " << fmt_double(rep.limit_iota_f) << " (expected z-1 = " << fmt_double(rep.z - 1)
                    << ")\nlimit iota0(g_n) = " << fmt_double(rep.limit_iota_g) << " (expected z = " << fmt_double(rep.z)
                    << ")\n";
        }
        return exit_ok;
    }
    throw UsageError("unknown verb '" + v + "'");
}

} // namespace detail

/// Runs one command; diagnostics go to err and the return value is the exit
/// status.
inline int run(const Command& cmd, std::ostream& out, std::ostream& err) {
    try {
        return detail::run_verb(cmd, out);
    } catch (const ParseError& e) {
        err << "parse error: " << e.what() << '\n';
        return exit_parse;
    } catch (const TypeError& e) {
        err << "type error: " << e.what() << '\n';
        return exit_type;
    } catch (const NumericError& e) {
        err << "numeric error: " << e.what() << '\n';
        return exit_numeric;
    } catch (const DomainError& e) {
        err << "domain error: " << e.what() << '\n';
        return exit_domain;
    } catch (const detail::UsageError& e) {
        err << e.what() << '\n';
        return exit_usage;
    }
}

/// "re,im" or "re".
inline Complex parse_complex(const std::string& s) {
    try {
        std::size_t used = 0;
        const auto comma = s.find(',');
        const double re = std::stod(s.substr(0, comma), &used);
        if (used != (comma == std::string::npos ? s.size() : comma)) throw std::invalid_argument(s);
        if (comma == std::string::npos) return {re, 0.0};
        const std::string im_text = s.substr(comma + 1);
        const double im = std::stod(im_text, &used);
        if (used != im_text.size()) throw std::invalid_argument(s);
        return {re, im};
    } catch (const std::exception&) {
        throw detail::UsageError("--z expects re or re,im; got '" + s + "'");
    }
}

} // namespace polystar::cli
