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

#include <vector>

#include "polystar/polylog/symfun.hpp"

namespace polystar {

/// f_n = Σ_{m=0..n} log^m(z)/m!  and  g_n = Σ_{m=1..n} (−1)^{m+1} log^m(1/(1−z))/m!.
/// Both tend to z, yet ι0(f_n) = f_{n+1} − 1 tends to z − 1 while ι0(g_n)
/// tends to z: ι0 is not continuous.
inline SymFun discontinuity_f(unsigned n) {
    SymFun f;
    for (unsigned m = 0; m <= n; ++m) f.add(SymKey{0, 0, Word::power(Letter::x0, m)}, 1);
    return f;
}

inline SymFun discontinuity_g(unsigned n) {
    SymFun g;
    for (unsigned m = 1; m <= n; ++m) g.add(SymKey{0, 0, Word::power(Letter::x1, m)}, m % 2 ? 1 : -1);
    return g;
}

struct DiscontinuityRow {
    unsigned n = 0;
    double f = 0, iota_f = 0, g = 0, iota_g = 0;
};

struct DiscontinuityReport {
    double z = 0.5;
    std::vector<DiscontinuityRow> rows;
    double limit_iota_f = 0; ///< last computed ι0(f_n), expected z − 1
    double limit_iota_g = 0; ///< last computed ι0(g_n), expected z
};

inline DiscontinuityReport discontinuity_demo(unsigned n_max, double z, double eps = 1e-15) {
    if (!(z > 0.0 && z < 1.0)) throw DomainError("discontinuity demo needs 0 < z < 1");
    if (n_max == 0) throw DomainError("discontinuity demo needs n >= 1");
    if (n_max + 1 > Word::max_size) throw DomainError("discontinuity demo: n too large for the word size limit");
    EvalParams p;
    p.z = Complex(z, 0.0);
    p.eps = eps;
    DiscontinuityReport rep;
    rep.z = z;
    for (unsigned n = 1; n <= n_max; ++n) {
        const SymFun f = discontinuity_f(n), g = discontinuity_g(n);
        DiscontinuityRow row;
        row.n = n;
        row.f = evaluate(f, p).real();
        row.iota_f = evaluate(iota(Letter::x0, f), p).real();
        row.g = evaluate(g, p).real();
        row.iota_g = evaluate(iota(Letter::x0, g), p).real();
        rep.rows.push_back(row);
    }
    rep.limit_iota_f = rep.rows.back().iota_f;
    rep.limit_iota_g = rep.rows.back().iota_g;
    return rep;
}

} // namespace polystar
