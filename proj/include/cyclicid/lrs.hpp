/*
   Copyright 2026 The cyclicid Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef CYCLICID_LRS_HPP
#define CYCLICID_LRS_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "poly2.hpp"

namespace cyclicid {

// Bit sequences are one byte per symbol, values 0 or 1.
using BitSeq = std::vector<std::uint8_t>;

// Smallest d dividing len(v) such that v is its first d symbols tiled.
inline std::size_t least_period(std::span<const std::uint8_t> v) {
    if (v.empty()) throw DomainError("least_period of an empty sequence");
    const std::size_t n = v.size();
    for (std::size_t d = 1; d < n; ++d) {
        if (n % d) continue;
        bool ok = true;
        for (std::size_t i = d; i < n && ok; ++i) ok = v[i] == v[i - d];
        if (ok) return d;
    }
    return n;
}

struct PatternSplit {
    bool degenerate = false;
    BitSeq tile;
};

inline PatternSplit is_degenerate_pattern(std::span<const std::uint8_t> v) {
    const std::size_t d = least_period(v);
    if (d == v.size()) return {};
    return {true, BitSeq(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(d))};
}

struct LrsResult {
    Poly2 minimal;  // X^L + c_{L-1} X^{L-1} + ... + c_0 with v_{r+L} = sum c_i v_{r+i}
    bool zero_sequence = false;
};

// Berlekamp-Massey. The caller supplies at least two periods.
inline LrsResult lrs_minimal_polynomial(std::span<const std::uint8_t> s) {
    const std::size_t N = s.size();
    std::vector<std::uint8_t> C(N + 1, 0), B(N + 1, 0), T;
    C[0] = B[0] = 1;
    std::size_t L = 0, m = 1;
    for (std::size_t i = 0; i < N; ++i) {
        std::uint8_t d = s[i] & 1;
        for (std::size_t j = 1; j <= L; ++j) d ^= C[j] & s[i - j];
        if (!d) {
            ++m;
            continue;
        }
        T = C;
        for (std::size_t j = 0; j + m <= N; ++j) C[j + m] ^= B[j];
        if (2 * L <= i) {
            L = i + 1 - L;
            B = T;
            m = 1;
        } else {
            ++m;
        }
    }
    LrsResult res;
    // Connection polynomial C(X) = 1 + c_1 X + ... + c_L X^L; the minimal polynomial is X^L C(1/X).
    for (std::size_t j = 0; j <= L; ++j)
        if (C[j]) res.minimal.flip(L - j);
    res.zero_sequence = (L == 0);
    return res;
}

// m = (X^n' + 1) / reciprocal(h), h the minimal polynomial of w tiled twice.
inline Poly2 minimal_generating_polynomial(std::span<const std::uint8_t> w) {
    bool any = false;
    for (auto b : w) any |= (b != 0);
    if (!any) throw DomainError("minimal generating polynomial of the all-zero sequence");
    const std::size_t np = least_period(w);
    BitSeq tiled(w.begin(), w.end());
    tiled.insert(tiled.end(), w.begin(), w.end());
    const Poly2 h = lrs_minimal_polynomial(tiled).minimal;
    return divide_exact(Poly2::xn1(np), reciprocal(h));
}

// One period of the impulse response of the recurrence with characteristic polynomial h
// (state 0...01). Its minimal polynomial is h itself.
inline BitSeq impulse_sequence(const Poly2& h, std::size_t length) {
    const std::size_t L = h.deg();
    BitSeq v(length, 0);
    for (std::size_t i = 0; i < length; ++i) {
        if (i < L) {
            v[i] = (i + 1 == L);
            continue;
        }
        std::uint8_t b = 0;
        for (std::size_t j = 0; j < L; ++j) b ^= static_cast<std::uint8_t>(h[j] & v[i - L + j]);
        v[i] = b;
    }
    return v;
}

}  // namespace cyclicid

#endif
