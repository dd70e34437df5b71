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

#include "polystar/shuffle.hpp"

namespace polystar {

/// x0^{s-1} x1 for the letter y_s, s >= 1.
inline Word x_encoding(std::uint32_t s) {
    if (s == 0) throw DomainError("pi_X: y_0 has no preimage in X*");
    Word w = Word::power(Letter::x0, s - 1);
    w.push_back(Letter::x1);
    return w;
}

inline Word pi_X(const YWord& y) {
    Word w;
    for (auto s : y.indices) w = w * x_encoding(s);
    return w;
}

/// y_{s1}...y_{sr} ↦ x0^{s1-1}x1...x0^{sr-1}x1.
inline NCPoly pi_X(const YPoly& q) {
    NCPoly r;
    for (const auto& [y, c] : q) r.add(pi_X(y), c);
    return r;
}

/// Monomials ending in x0 map to 0; the rest to their Y-encoding.
inline YPoly pi_Y(const NCPoly& p) {
    YPoly r;
    for (const auto& [w, c] : p) {
        if (!w.empty() && w.back() == Letter::x0) continue;
        r.add(composition_of(w).to_yword(), c);
    }
    return r;
}

/// ⟨p|q⟩ on the Y side.
inline Rational pairing(const YPoly& p, const YPoly& q) {
    Rational s = 0;
    for (const auto& [w, c] : p) s += c * q.coeff(w);
    return s;
}

} // namespace polystar
