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

#ifndef CYCLICID_XN1_HPP
#define CYCLICID_XN1_HPP

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

#include "poly2.hpp"

namespace cyclicid {

struct FactorMultiset {
    std::vector<std::pair<Poly2, unsigned>> entries;

    Poly2 product() const {
        Poly2 r = Poly2::from_word(1);
        for (const auto& [p, e] : entries)
            for (unsigned i = 0; i < e; ++i) r = r * p;
        return r;
    }

    std::size_t divisor_count() const {
        std::size_t c = 1;
        for (const auto& [p, e] : entries) c *= e + 1;
        return c;
    }
};

namespace detail {

inline Poly2 sqr_mod(const Poly2& a, const Poly2& m) {
    if (m.fits_word()) {
        const auto w = a.word();
        return Poly2::from_word(word::mulmod(w, w, m.word()));
    }
    return rem(a * a, m);
}

inline std::vector<std::size_t> prime_divisors(std::size_t d) {
    std::vector<std::size_t> ps;
    for (std::size_t p = 2; p * p <= d; ++p) {
        if (d % p) continue;
        ps.push_back(p);
        while (d % p == 0) d /= p;
    }
    if (d > 1) ps.push_back(d);
    return ps;
}

// g is a product of distinct irreducibles, all of degree d. Candidates of degree d
// that divide g are necessarily among those irreducibles.
inline void split_equal_degree(Poly2 g, std::size_t d, std::vector<Poly2>& out) {
    if (g.deg() == d) {
        out.push_back(g);
        return;
    }
    const Poly2 lead = Poly2::monomial(d);
    for (std::uint64_t low = 1;; low += 2) {
        Poly2 c = lead;
        c += Poly2::from_word(low);
        auto [q, r] = divmod(g, c);
        if (!r.is_zero()) continue;
        out.push_back(c);
        g = std::move(q);
        if (g.deg() == d) {
            out.push_back(g);
            return;
        }
    }
}

}  // namespace detail

inline bool is_irreducible(const Poly2& f) {
    if (f.is_zero() || f.deg() == 0) throw DomainError("irreducibility of a constant");
    const std::size_t d = f.deg();
    if (d == 1) return true;
    if (!f[0]) return false;
    const Poly2 x = Poly2::monomial(1);
    std::vector<Poly2> pw(d + 1);
    pw[0] = x;
    for (std::size_t i = 1; i <= d; ++i) pw[i] = detail::sqr_mod(pw[i - 1], f);
    if (pw[d] != x) return false;
    for (std::size_t r : detail::prime_divisors(d))
        if (gcd(pw[d / r] + x, f).deg() != 0) return false;
    return true;
}

// Least l >= 1 with f | X^l + 1.
inline std::uint64_t order(const Poly2& f, std::uint64_t cap = std::uint64_t{1} << 30) {
    if (f.is_zero() || f.deg() == 0 || !f[0]) throw DomainError("order needs f(0) = 1 and deg f >= 1");
    if (f.fits_word()) {
        const word::W m = f.word();
        const int dm = word::top(m);
        word::W x = 1;
        for (std::uint64_t l = 1; l <= cap; ++l) {
            x <<= 1;
            if ((x >> dm) & 1) x ^= m;
            if (x == 1) return l;
        }
    } else {
        const Poly2 one = Poly2::from_word(1);
        Poly2 x = one;
        for (std::uint64_t l = 1; l <= cap; ++l) {
            x = rem(x.shifted(1), f);
            if (x == one) return l;
        }
    }
    throw ResourceError("order search exceeded its iteration cap");
}

// X^n + 1 = (X^m + 1)^(2^a) with m odd; X^m + 1 is squarefree, so distinct-degree
// splitting followed by trial division inside each degree class factors it.
inline FactorMultiset factor_xn1(std::size_t n) {
    if (n == 0) throw DomainError("factor_xn1 needs n >= 1");
    const unsigned a = static_cast<unsigned>(std::countr_zero(n));
    const std::size_t m = n >> a;
    std::vector<Poly2> irr;
    Poly2 f = Poly2::xn1(m);
    const Poly2 x = Poly2::monomial(1);
    Poly2 h = x;
    for (std::size_t d = 1; 2 * d <= f.deg(); ++d) {
        h = detail::sqr_mod(h, f);
        Poly2 g = gcd(h + x, f);
        if (g.deg() == 0) continue;
        detail::split_equal_degree(g, d, irr);
        f = divide_exact(f, g);
        h = rem(h, f);
    }
    if (f.deg() >= 1) irr.push_back(f);
    std::sort(irr.begin(), irr.end());
    FactorMultiset fm;
    for (auto& p : irr) fm.entries.emplace_back(std::move(p), 1u << a);
    return fm;
}

// Factor g over a known factor list; g must divide the product.
inline FactorMultiset factor_over(Poly2 g, const FactorMultiset& base) {
    FactorMultiset fm;
    for (const auto& [p, e] : base.entries) {
        unsigned c = 0;
        for (;;) {
            auto [q, r] = divmod(g, p);
            if (!r.is_zero()) break;
            g = std::move(q);
            ++c;
        }
        if (c > e) throw DomainError("polynomial does not divide the product of the base");
        if (c) fm.entries.emplace_back(p, c);
    }
    if (g != Poly2::from_word(1)) throw DomainError("polynomial does not factor over the given base");
    return fm;
}

inline std::vector<Poly2> divisors(const FactorMultiset& fm) {
    std::vector<Poly2> ds{Poly2::from_word(1)};
    for (const auto& [p, e] : fm.entries) {
        const std::size_t base = ds.size();
        Poly2 pk = Poly2::from_word(1);
        for (unsigned k = 1; k <= e; ++k) {
            pk = pk * p;
            for (std::size_t i = 0; i < base; ++i) ds.push_back(ds[i] * pk);
        }
    }
    std::sort(ds.begin(), ds.end());
    ds.erase(std::unique(ds.begin(), ds.end()), ds.end());
    return ds;
}

inline std::vector<Poly2> divisors_xn1(std::size_t n) { return divisors(factor_xn1(n)); }

}  // namespace cyclicid

#endif
