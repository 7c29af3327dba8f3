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

#ifndef CYCLICID_CYCLIC_CODE_HPP
#define CYCLICID_CYCLIC_CODE_HPP

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <ranges>
#include <string>
#include <vector>

#include "errors.hpp"
#include "poly2.hpp"
#include "xn1.hpp"

namespace cyclicid {

// Length-n vectors travel as 64-bit words: coordinate i is bit i, i.e. the
// coefficient of X^i. Anything that enumerates vectors therefore needs n <= 64.
inline constexpr std::size_t max_word_length = 64;

class CyclicCode {
   public:
    CyclicCode(std::size_t n, Poly2 g) : n_(n), g_(std::move(g)) {
        if (n_ == 0) throw InvalidGenerator("code length must be positive");
        if (g_.is_zero()) throw InvalidGenerator("zero generator");
        auto [h, r] = divmod(Poly2::xn1(n_), g_);
        if (!r.is_zero()) throw InvalidGenerator("generator does not divide X^" + std::to_string(n_) + "+1");
        k_ = n_ - g_.deg();
        g_dual_ = reciprocal(h);
    }

    std::size_t n() const { return n_; }
    std::size_t k() const { return k_; }
    const Poly2& g() const { return g_; }
    const Poly2& g_dual() const { return g_dual_; }
    bool trivial() const { return k_ == 0 || k_ == n_; }

    friend bool operator==(const CyclicCode& a, const CyclicCode& b) { return a.n_ == b.n_ && a.g_ == b.g_; }

   private:
    std::size_t n_;
    Poly2 g_;
    std::size_t k_ = 0;
    Poly2 g_dual_;
};

inline CyclicCode make_code(std::size_t n, const Poly2& g) { return CyclicCode(n, g); }

inline Poly2 dual_generator(const CyclicCode& c) { return c.g_dual(); }

inline bool is_degenerate_code(const CyclicCode& c) {
    if (c.trivial()) throw NotApplicable("degeneracy of a trivial code");
    return order(c.g_dual()) < c.n();
}

namespace detail {

inline void require_words(const CyclicCode& c, std::size_t max_k) {
    if (c.n() > max_word_length) throw ResourceError("code length " + std::to_string(c.n()) + " exceeds 64");
    if (c.k() > max_k)
        throw ResourceError("enumeration of 2^" + std::to_string(c.k()) + " codewords exceeds the guard k <= " +
                            std::to_string(max_k));
}

}  // namespace detail

// Rows X^j g(X), j < k.
inline std::vector<std::uint64_t> generator_rows(const CyclicCode& c) {
    if (c.n() > max_word_length) throw ResourceError("code length exceeds 64");
    std::vector<std::uint64_t> rows(c.k());
    for (std::size_t j = 0; j < c.k(); ++j) rows[j] = c.g().word() << j;
    return rows;
}

// All 2^k codewords u(X)g(X), in message order.
inline auto codewords(const CyclicCode& c, std::size_t max_k = 24) {
    detail::require_words(c, max_k);
    const std::uint64_t g = c.g().word();
    return std::views::iota(std::uint64_t{0}, std::uint64_t{1} << c.k()) |
           std::views::transform([g](std::uint64_t u) { return word::clmul(u, g); });
}

struct WeightDistribution {
    std::vector<std::uint64_t> A;  // A[i] = number of codewords of weight i
};

inline WeightDistribution weight_distribution(const CyclicCode& c, std::size_t max_k = 24) {
    detail::require_words(c, max_k);
    const auto rows = generator_rows(c);
    WeightDistribution wd{std::vector<std::uint64_t>(c.n() + 1, 0)};
    std::uint64_t v = 0;
    wd.A[0] = 1;
    const std::uint64_t total = std::uint64_t{1} << c.k();
    for (std::uint64_t i = 1; i < total; ++i) {
        v ^= rows[static_cast<std::size_t>(std::countr_zero(i))];
        ++wd.A[static_cast<std::size_t>(std::popcount(v))];
    }
    return wd;
}

inline void require_probability(double p) {
    if (!(p >= 0.0 && p <= 0.5)) throw DomainError("crossover probability must lie in [0, 1/2]");
}

// P(C): probability that a BSC(p) error pattern is a codeword.
inline double p_zero_syndrome_code(const CyclicCode& c, double p, std::size_t max_k = 24) {
    require_probability(p);
    const auto wd = weight_distribution(c, max_k);
    double s = 0.0;
    for (std::size_t i = 0; i < wd.A.size(); ++i) {
        if (!wd.A[i]) continue;
        s += static_cast<double>(wd.A[i]) * std::pow(p, static_cast<double>(i)) *
             std::pow(1.0 - p, static_cast<double>(c.n() - i));
    }
    return s;
}

namespace detail {

inline std::size_t require_proper_divisor(std::size_t n, const Poly2& f) {
    if (n > max_word_length) throw ResourceError("block length exceeds 64");
    if (f.is_zero() || !divides(f, Poly2::xn1(n))) throw DomainError("f must divide X^n+1");
    const std::size_t d = f.deg();
    if (d == 0 || d == n) throw NotApplicable("f is a trivial divisor of X^n+1");
    return d;
}

}  // namespace detail

// h_l[i] = coefficient of X^l in X^i mod f, for l < deg f.
inline std::vector<std::uint64_t> syndrome_basis(std::size_t n, const Poly2& f) {
    const std::size_t d = detail::require_proper_divisor(n, f);
    std::vector<std::uint64_t> h(d, 0);
    Poly2 x = Poly2::from_word(1);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t l = 0; l < d; ++l)
            if (x[l]) h[l] |= std::uint64_t{1} << i;
        x = rem(x.shifted(1), f);
    }
    return h;
}

// Rows X^l f_perp(X), l < deg f: the cyclic parity-check matrix of C(n, f).
inline std::vector<std::uint64_t> parity_check_rows(std::size_t n, const Poly2& f) {
    const std::size_t d = detail::require_proper_divisor(n, f);
    const std::uint64_t fp = reciprocal(divide_exact(Poly2::xn1(n), f)).word();
    std::vector<std::uint64_t> h(d);
    for (std::size_t l = 0; l < d; ++l) h[l] = fp << l;
    return h;
}

// The syndrome map v -> v(X) mod f for length-n words, deg f <= 63.
class ResidueMap {
   public:
    ResidueMap(std::size_t n, const Poly2& f) : f_(f.word()), x_(n) {
        if (n > max_word_length) throw ResourceError("block length exceeds 64");
        if (f.is_zero()) throw DomainError("division by the zero polynomial");
        std::uint64_t x = word::mod(1, f_);
        const int d = word::top(f_);
        for (std::size_t i = 0; i < n; ++i) {
            x_[i] = x;
            x <<= 1;
            if ((x >> d) & 1) x ^= f_;
        }
    }

    std::uint64_t operator()(std::uint64_t v) const {
        std::uint64_t r = 0;
        while (v) {
            r ^= x_[static_cast<std::size_t>(std::countr_zero(v))];
            v &= v - 1;
        }
        return r;
    }

    std::uint64_t x_pow(std::size_t i) const { return x_[i]; }
    std::uint64_t modulus() const { return f_; }

   private:
    std::uint64_t f_;
    std::vector<std::uint64_t> x_;
};

}  // namespace cyclicid

#endif
