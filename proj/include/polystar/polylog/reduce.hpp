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

#include <compare>
#include <map>
#include <mutex>
#include <unordered_map>

#include "polystar/shuffle.hpp"

namespace polystar {

/// Li_u(z)·log^n(z)/n! with u in X*x1 or empty.
struct LogTerm {
    Word u;
    unsigned n = 0;
    friend auto operator<=>(const LogTerm&, const LogTerm&) = default;
};

/// Linear combination of Li_u·log^n/n!.
using LogForm = Linear<LogTerm>;

/// Splits w = v·x0^n with v empty or ending in x1.
inline std::pair<Word, unsigned> split_trailing_x0(const Word& w) {
    std::size_t end = w.size();
    while (end > 0 && w[end - 1] == Letter::x0) --end;
    return {w.prefix(end), static_cast<unsigned>(w.size() - end)};
}

/// Rewrites Li_w as Σ c·Li_u·log^n(z)/n! with u ∈ X*x1 ∪ {ε}, using
///   u x1 x0^n = u x1 ⧢ x0^n − Σ_{k=1..n} (u ⧢ x0^k) x1 x0^{n−k}.
/// Each term on the right has a shorter trailing x0 block.
inline LogForm reduce_trailing_x0(const Word& w) {
    static std::mutex mutex;
    static std::unordered_map<Word, LogForm> cache;
    {
        std::lock_guard lock(mutex);
        if (auto it = cache.find(w); it != cache.end()) return it->second;
    }

    LogForm out;
    auto [v, n] = split_trailing_x0(w);
    if (n == 0) {
        out.add(LogTerm{w, 0}, 1);
    } else if (v.empty()) {
        out.add(LogTerm{Word{}, n}, 1);
    } else {
        out.add(LogTerm{v, n}, 1);
        const Word u = v.prefix(v.size() - 1);
        for (unsigned k = 1; k <= n; ++k) {
            const Word tail = Word::letter(Letter::x1) * Word::power(Letter::x0, n - k);
            for (const auto& [s, m] : *shuffle_words(u, Word::power(Letter::x0, k)))
                out.add_scaled(reduce_trailing_x0(s * tail), -Rational(static_cast<unsigned long>(m)));
        }
    }

    std::lock_guard lock(mutex);
    cache.emplace(w, out);
    return out;
}

} // namespace polystar
