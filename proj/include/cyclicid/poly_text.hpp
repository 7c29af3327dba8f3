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

#ifndef CYCLICID_POLY_TEXT_HPP
#define CYCLICID_POLY_TEXT_HPP

#include <cctype>
#include <charconv>
#include <string>
#include <string_view>
#include <vector>

#include "poly2.hpp"

namespace cyclicid {

// Canonical output form: ascending coefficients, "1101" is 1+X+X^3, zero is "0".
inline std::string to_bits(const Poly2& p) {
    if (p.is_zero()) return "0";
    std::string s(p.deg() + 1, '0');
    for (std::size_t i = 0; i < s.size(); ++i)
        if (p[i]) s[i] = '1';
    return s;
}

// Length-n vector packed in a word, coordinate 0 first.
inline std::string to_bits(std::uint64_t w, std::size_t n) {
    std::string s(n, '0');
    for (std::size_t i = 0; i < n; ++i)
        if ((w >> i) & 1) s[i] = '1';
    return s;
}

inline std::string to_human(const Poly2& p) {
    if (p.is_zero()) return "0";
    std::string s;
    for (std::size_t i = 0; i <= p.deg(); ++i) {
        if (!p[i]) continue;
        if (!s.empty()) s += '+';
        if (i == 0)
            s += '1';
        else if (i == 1)
            s += 'X';
        else
            s += "X^" + std::to_string(i);
    }
    return s;
}

namespace detail {

inline std::string_view strip(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

inline std::size_t parse_exponent(std::string_view t, std::string_view whole) {
    std::size_t e = 0;
    auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), e);
    if (ec != std::errc{} || ptr != t.data() + t.size() || e > 4096)
        throw ParseError("bad exponent in polynomial '" + std::string(whole) + "'");
    return e;
}

}  // namespace detail

// Accepts the bit-string form and the human form ("x^3+x+1", "X4+X3+1", "x", "1").
inline Poly2 parse_poly(std::string_view text) {
    const std::string_view s = detail::strip(text);
    if (s.empty()) throw ParseError("empty polynomial");
    if (s.find_first_not_of("01") == std::string_view::npos) {
        Poly2 p;
        for (std::size_t i = 0; i < s.size(); ++i)
            if (s[i] == '1') p.flip(i);
        return p;
    }
    Poly2 p;
    std::size_t pos = 0;
    while (pos <= s.size()) {
        std::size_t end = s.find('+', pos);
        if (end == std::string_view::npos) end = s.size();
        std::string_view t = detail::strip(s.substr(pos, end - pos));
        if (t.empty()) throw ParseError("empty monomial in '" + std::string(s) + "'");
        if (t == "1") {
            p.flip(0);
        } else if (t == "0") {
        } else if (t[0] == 'x' || t[0] == 'X') {
            t.remove_prefix(1);
            if (t.empty()) {
                p.flip(1);
            } else {
                if (t[0] == '^') t.remove_prefix(1);
                p.flip(detail::parse_exponent(t, s));
            }
        } else {
            throw ParseError("cannot read monomial '" + std::string(t) + "'");
        }
        pos = end + 1;
    }
    return p;
}

// Comma-separated factors, multiplied together.
inline Poly2 parse_poly_product(std::string_view text) {
    Poly2 r = Poly2::from_word(1);
    std::size_t pos = 0;
    for (;;) {
        std::size_t end = text.find(',', pos);
        if (end == std::string_view::npos) end = text.size();
        r = r * parse_poly(text.substr(pos, end - pos));
        if (end == text.size()) break;
        pos = end + 1;
    }
    return r;
}

}  // namespace cyclicid

#endif
