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

#ifndef CYCLICID_POLY2_HPP
#define CYCLICID_POLY2_HPP

#include <algorithm>
#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "errors.hpp"

namespace cyclicid {

// Polynomials that fit in one machine word. Bit i is the coefficient of X^i.
// These are the hot-path versions; Poly2 below is the general type.
namespace word {

using W = std::uint64_t;

inline int top(W a) { return 63 - std::countl_zero(a); }

// Low 64 bits of the carry-less product.
inline W clmul(W a, W b) {
    W r = 0;
    while (b) {
        if (b & 1) r ^= a;
        a <<= 1;
        b >>= 1;
    }
    return r;
}

inline W mod(W a, W m) {
    const int dm = top(m);
    while (a && top(a) >= dm) a ^= m << (top(a) - dm);
    return a;
}

// a, b already reduced mod m.
inline W mulmod(W a, W b, W m) {
    const int dm = top(m);
    W r = 0;
    while (b) {
        if (b & 1) r ^= a;
        b >>= 1;
        a <<= 1;
        if ((a >> dm) & 1) a ^= m;
    }
    return r;
}

inline W mask(std::size_t n) { return n >= 64 ? ~W{0} : (W{1} << n) - 1; }

inline int parity(W a) { return std::popcount(a) & 1; }

}  // namespace word

class Poly2 {
   public:
    Poly2() = default;

    static Poly2 from_word(std::uint64_t w) {
        Poly2 p;
        if (w) p.w_.push_back(w);
        return p;
    }

    static Poly2 monomial(std::size_t i) {
        Poly2 p;
        p.flip(i);
        return p;
    }

    // X^n + 1
    static Poly2 xn1(std::size_t n) {
        Poly2 p = monomial(n);
        p.flip(0);
        return p;
    }

    static Poly2 from_coeffs(std::span<const std::uint8_t> c) {
        Poly2 p;
        for (std::size_t i = 0; i < c.size(); ++i)
            if (c[i]) p.flip(i);
        return p;
    }

    bool is_zero() const { return w_.empty(); }

    // Empty for the zero polynomial.
    std::optional<std::size_t> degree() const {
        if (w_.empty()) return std::nullopt;
        return 64 * (w_.size() - 1) + static_cast<std::size_t>(word::top(w_.back()));
    }

    std::size_t deg() const {
        if (w_.empty()) throw DomainError("degree of the zero polynomial");
        return 64 * (w_.size() - 1) + static_cast<std::size_t>(word::top(w_.back()));
    }

    bool operator[](std::size_t i) const {
        const std::size_t k = i / 64;
        return k < w_.size() && ((w_[k] >> (i % 64)) & 1);
    }

    void flip(std::size_t i) {
        const std::size_t k = i / 64;
        if (k >= w_.size()) w_.resize(k + 1, 0);
        w_[k] ^= std::uint64_t{1} << (i % 64);
        trim();
    }

    bool fits_word() const { return w_.size() <= 1; }

    std::uint64_t word() const {
        if (w_.size() > 1) throw ResourceError("polynomial does not fit in 64 bits");
        return w_.empty() ? 0 : w_[0];
    }

    std::size_t weight() const {
        std::size_t s = 0;
        for (auto x : w_) s += static_cast<std::size_t>(std::popcount(x));
        return s;
    }

    const std::vector<std::uint64_t>& limbs() const { return w_; }

    // this += other * X^s
    Poly2& add_shifted(const Poly2& o, std::size_t s) {
        if (o.w_.empty()) return *this;
        const std::size_t ls = s / 64, bs = s % 64;
        const std::size_t need = o.w_.size() + ls + 1;
        if (w_.size() < need) w_.resize(need, 0);
        for (std::size_t i = 0; i < o.w_.size(); ++i) {
            w_[i + ls] ^= o.w_[i] << bs;
            if (bs) w_[i + ls + 1] ^= o.w_[i] >> (64 - bs);
        }
        trim();
        return *this;
    }

    Poly2 shifted(std::size_t s) const {
        Poly2 r;
        r.add_shifted(*this, s);
        return r;
    }

    Poly2& operator+=(const Poly2& o) { return add_shifted(o, 0); }

    friend Poly2 operator+(Poly2 a, const Poly2& b) { return a += b; }

    friend Poly2 operator*(const Poly2& a, const Poly2& b) {
        Poly2 r;
        if (a.is_zero() || b.is_zero()) return r;
        if (a.deg() + b.deg() < 64) return from_word(word::clmul(a.word(), b.word()));
        for (std::size_t i = 0; i <= b.deg(); ++i)
            if (b[i]) r.add_shifted(a, i);
        return r;
    }

    friend bool operator==(const Poly2&, const Poly2&) = default;

    // Canonical order: by degree, then by the coefficient bits read as an integer.
    // Both are the same as comparing the packed integers.
    friend std::strong_ordering operator<=>(const Poly2& a, const Poly2& b) {
        if (a.w_.size() != b.w_.size()) return a.w_.size() <=> b.w_.size();
        for (std::size_t i = a.w_.size(); i-- > 0;)
            if (a.w_[i] != b.w_[i]) return a.w_[i] <=> b.w_[i];
        return std::strong_ordering::equal;
    }

   private:
    void trim() {
        while (!w_.empty() && w_.back() == 0) w_.pop_back();
    }

    std::vector<std::uint64_t> w_;
};

inline Poly2 add(const Poly2& a, const Poly2& b) { return a + b; }
inline Poly2 mul(const Poly2& a, const Poly2& b) { return a * b; }

inline std::pair<Poly2, Poly2> divmod(const Poly2& a, const Poly2& m) {
    if (m.is_zero()) throw DomainError("division by the zero polynomial");
    const std::size_t dm = m.deg();
    if (a.fits_word() && m.fits_word()) {
        word::W r = a.word(), q = 0;
        const int d = static_cast<int>(dm);
        while (r && word::top(r) >= d) {
            const int s = word::top(r) - d;
            q |= word::W{1} << s;
            r ^= m.word() << s;
        }
        return {Poly2::from_word(q), Poly2::from_word(r)};
    }
    Poly2 q, r = a;
    while (!r.is_zero() && r.deg() >= dm) {
        const std::size_t s = r.deg() - dm;
        q.flip(s);
        r.add_shifted(m, s);
    }
    return {q, r};
}

inline Poly2 rem(const Poly2& a, const Poly2& m) { return divmod(a, m).second; }

inline bool divides(const Poly2& d, const Poly2& a) { return rem(a, d).is_zero(); }

// a / m where m is known to divide a.
inline Poly2 divide_exact(const Poly2& a, const Poly2& m) {
    auto [q, r] = divmod(a, m);
    if (!r.is_zero()) throw DomainError("divisor does not divide");
    return q;
}

inline Poly2 gcd(Poly2 a, Poly2 b) {
    if (a.is_zero() && b.is_zero()) throw DomainError("gcd(0, 0) is undefined");
    while (!b.is_zero()) {
        Poly2 r = rem(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

inline Poly2 reciprocal(const Poly2& f) {
    if (f.is_zero()) throw DomainError("reciprocal of the zero polynomial");
    const std::size_t d = f.deg();
    Poly2 r;
    for (std::size_t i = 0; i <= d; ++i)
        if (f[i]) r.flip(d - i);
    return r;
}

inline Poly2 mulmod(const Poly2& a, const Poly2& b, const Poly2& m) { return rem(a * b, m); }

}  // namespace cyclicid

#endif
