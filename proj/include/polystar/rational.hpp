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

#include <cctype>
#include <cstdint>
#include <string>
#include <string_view>

#include <gmpxx.h>

#include "polystar/errors.hpp"

namespace polystar {

/// Exact scalar field. GMP keeps every value canonical (lowest terms,
/// positive denominator) after each arithmetic operation.
using Rational = mpq_class;
using Integer = mpz_class;

inline std::string to_string(const Rational& q) { return q.get_str(); }
inline std::string to_string(const Integer& n) { return n.get_str(); }

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

/// Parses `p`, `-p` or `p/q` (decimal digits only).
inline Rational parse_rational(std::string_view text) {
    std::string s(text);
    std::size_t i = 0;
    if (i < s.size() && (s[i] == '-' || s[i] == '+')) ++i;
    bool seen_digit = false, seen_slash = false, digit_after_slash = false;
    for (std::size_t j = i; j < s.size(); ++j) {
        if (std::isdigit(static_cast<unsigned char>(s[j]))) {
            seen_digit = true;
            if (seen_slash) digit_after_slash = true;
        } else if (s[j] == '/' && !seen_slash && seen_digit) {
            seen_slash = true;
        } else {
            throw DomainError("malformed rational '" + s + "'");
        }
    }
    if (!seen_digit || (seen_slash && !digit_after_slash))
        throw DomainError("malformed rational '" + s + "'");
    if (s[0] == '+') s.erase(0, 1);
    Rational q;
    if (q.set_str(s, 10) != 0) throw DomainError("malformed rational '" + s + "'");
    if (q.get_den() == 0) throw DomainError("zero denominator in '" + s + "'");
    q.canonicalize();
    return q;
}

inline Rational pow(const Rational& base, unsigned exponent) {
    Rational result;
    mpz_pow_ui(result.get_num_mpz_t(), base.get_num_mpz_t(), exponent);
    mpz_pow_ui(result.get_den_mpz_t(), base.get_den_mpz_t(), exponent);
    return result;
}

/// Integer power allowing negative exponents (base must then be nonzero).
inline Rational ipow(const Rational& base, long exponent) {
    if (exponent >= 0) return pow(base, static_cast<unsigned>(exponent));
    if (sgn(base) == 0) throw DomainError("zero raised to a negative power");
    Rational inv = 1 / base;
    return pow(inv, static_cast<unsigned>(-exponent));
}

inline Integer binomial(long n, long k) {
    if (k < 0 || n < 0 || k > n) return 0;
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

inline Integer factorial(unsigned long n) {
    Integer r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

inline bool fits_int64(const Integer& n) {
    return mpz_sizeinbase(n.get_mpz_t(), 2) <= 62 || n.fits_slong_p();
}

} // namespace polystar
