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
#include <vector>

#include "polystar/word.hpp"

namespace polystar {

/// True iff w is nonempty and strictly smaller than each of its proper rotations.
inline bool is_lyndon(const Word& w) {
    if (w.empty()) return false;
    for (std::size_t k = 1; k < w.size(); ++k)
        if (!(w < w.rotated(k))) return false;
    return true;
}

/// All Lyndon words over {x0 < x1} of length <= max_len, in lexicographic
/// order (Duval's generation algorithm).
inline std::vector<Word> lyndon_up_to(std::size_t max_len) {
    std::vector<Word> out;
    if (max_len == 0) return out;
    if (max_len > Word::max_size) throw DomainError("Lyndon length bound exceeds 64");
    std::vector<std::uint8_t> w{0};
    while (!w.empty()) {
        Word word;
        for (auto a : w) word.push_back(static_cast<Letter>(a));
        out.push_back(word);
        const std::size_t m = w.size();
        while (w.size() < max_len) w.push_back(w[w.size() - m]);
        while (!w.empty() && w.back() == 1) w.pop_back();
        if (!w.empty()) w.back() = 1;
    }
    return out;
}

/// Chen-Fox-Lyndon factorization w = l1 l2 ... lk with l1 >= l2 >= ... >= lk
/// Lyndon (Duval's linear-time factorization).
inline std::vector<Word> clf_factorize(const Word& w) {
    std::vector<Word> factors;
    const std::size_t n = w.size();
    std::size_t i = 0;
    while (i < n) {
        std::size_t j = i + 1, k = i;
        while (j < n && w[k] <= w[j]) {
            k = (w[k] < w[j]) ? i : k + 1;
            ++j;
        }
        while (i <= k) {
            factors.push_back(w.suffix_from(i).prefix(j - k));
            i += j - k;
        }
    }
    return factors;
}

} // namespace polystar
