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

#ifndef CYCLICID_SYNDROME_DIST_HPP
#define CYCLICID_SYNDROME_DIST_HPP

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "cyclic_code.hpp"
#include "linalg.hpp"
#include "lrs.hpp"
#include "poly2.hpp"
#include "xn1.hpp"

namespace cyclicid {

enum class DistributionClass { Degenerate, Uniform, RestrictedUniform, Irregular };

inline std::string_view class_name(DistributionClass c) {
    switch (c) {
        case DistributionClass::Degenerate: return "Degenerate";
        case DistributionClass::Uniform: return "Uniform";
        case DistributionClass::RestrictedUniform: return "RestrictedUniform";
        case DistributionClass::Irregular: return "Irregular";
    }
    return "?";
}

// Size limits for anything that enumerates or allocates 2^x entries.
struct Guards {
    std::size_t max_block = 24;
    std::size_t max_dim = 24;
    std::size_t max_deg_f = 20;
};

// Upper limits the guards may be raised to.
inline constexpr Guards hard_caps{64, 30, 24};

// ---- subspace specifications ----------------------------------------------

struct Truncation {
    CyclicCode code;
    std::size_t n;
};

struct BoundarySpan {
    CyclicCode code;
    std::size_t d1, q, d2;
};

using SubspaceSpec = std::variant<Truncation, BoundarySpan>;

inline const CyclicCode& code_of(const SubspaceSpec& s) {
    return std::visit([](const auto& v) -> const CyclicCode& { return v.code; }, s);
}

inline std::size_t length_of(const SubspaceSpec& s) {
    if (auto t = std::get_if<Truncation>(&s)) return t->n;
    const auto& b = std::get<BoundarySpan>(s);
    return b.d1 + b.q * b.code.n() + b.d2;
}

inline std::string describe(const SubspaceSpec& s) {
    if (auto t = std::get_if<Truncation>(&s)) return "Truncation{n=" + std::to_string(t->n) + "}";
    const auto& b = std::get<BoundarySpan>(s);
    return "BoundarySpan{d1=" + std::to_string(b.d1) + ",q=" + std::to_string(b.q) + ",d2=" + std::to_string(b.d2) + "}";
}

inline void validate(const SubspaceSpec& s) {
    const std::size_t n0 = code_of(s).n();
    if (auto t = std::get_if<Truncation>(&s)) {
        if (t->n < 1 || t->n >= n0) throw DomainError("truncation length must satisfy 1 <= n < n0");
        return;
    }
    const auto& b = std::get<BoundarySpan>(s);
    if (b.d1 >= n0 || b.d2 >= n0) throw DomainError("suffix and prefix lengths must be below n0");
    if (length_of(s) < 1) throw DomainError("empty boundary span");
}

// ---- block types -----------------------------------------------------------

struct Interior {
    std::size_t offset;
};

struct Boundary {
    std::size_t d1, q, d2;
};

using BlockType = std::variant<Interior, Boundary>;

// Block j (1-based) covers stream positions s+(j-1)n .. s+jn-1; codewords start at s0 mod n0.
inline BlockType block_decomposition(std::size_t n0, std::size_t n, std::size_t s, std::size_t s0, std::size_t j) {
    if (n == 0 || s >= n || s0 >= n0 || j == 0) throw DomainError("block_decomposition needs 0 <= s < n, 0 <= s0 < n0, j >= 1");
    const std::size_t a = s + (j - 1) * n;
    const std::size_t offset = (a + n0 - s0 % n0) % n0;
    if (n < n0 && offset + n <= n0) return Interior{offset};
    const std::size_t d1 = offset == 0 ? 0 : n0 - offset;
    return Boundary{d1, (n - d1) / n0, (n - d1) % n0};
}

inline SubspaceSpec to_spec(const CyclicCode& code, const BlockType& b, std::size_t n) {
    if (std::holds_alternative<Interior>(b)) return Truncation{code, n};
    const auto& x = std::get<Boundary>(b);
    return BoundarySpan{code, x.d1, x.q, x.d2};
}

// ---- subspaces ---------------------------------------------------------------

// One summand of the block-diagonal decomposition, with its basis already placed
// at the right coordinates of the length-n block.
struct Component {
    enum Kind { Prefix, Full, Suffix } kind;
    std::size_t shift;
    std::size_t length;
    std::vector<std::uint64_t> basis;
};

namespace detail {

inline std::vector<std::uint64_t> reduced(const std::vector<std::uint64_t>& rows) {
    Echelon e;
    for (auto r : rows) e.insert(r);
    return e.rows();
}

}  // namespace detail

inline std::vector<Component> components(const SubspaceSpec& s) {
    validate(s);
    const CyclicCode& c = code_of(s);
    if (c.n() > max_word_length || length_of(s) > max_word_length) throw ResourceError("block length exceeds 64");
    const auto rows = generator_rows(c);
    const std::size_t n0 = c.n();
    std::vector<Component> out;
    auto prefix = [&](std::size_t len, std::size_t shift) {
        std::vector<std::uint64_t> b;
        for (auto r : rows) b.push_back((r & word::mask(len)) << shift);
        out.push_back({Component::Prefix, shift, len, detail::reduced(b)});
    };
    if (auto t = std::get_if<Truncation>(&s)) {
        prefix(t->n, 0);
        return out;
    }
    const auto& b = std::get<BoundarySpan>(s);
    if (b.d1) {
        std::vector<std::uint64_t> v;
        for (auto r : rows) v.push_back(r >> (n0 - b.d1));
        out.push_back({Component::Suffix, 0, b.d1, detail::reduced(v)});
    }
    for (std::size_t i = 0; i < b.q; ++i) {
        std::vector<std::uint64_t> v;
        for (auto r : rows) v.push_back(r << (b.d1 + i * n0));
        out.push_back({Component::Full, b.d1 + i * n0, n0, v});
    }
    if (b.d2) prefix(b.d2, b.d1 + b.q * n0);
    return out;
}

struct Subspace {
    std::size_t n = 0;
    std::vector<std::uint64_t> basis;
    std::size_t dim() const { return basis.size(); }
};

inline Subspace build_subspace(const SubspaceSpec& s, const Guards& g = {}) {
    const std::size_t n = length_of(s);
    if (n > g.max_block) throw ResourceError("block length " + std::to_string(n) + " exceeds the guard " + std::to_string(g.max_block));
    Subspace sub{n, {}};
    for (auto& comp : components(s)) sub.basis.insert(sub.basis.end(), comp.basis.begin(), comp.basis.end());
    if (sub.dim() > g.max_dim)
        throw ResourceError("subspace dimension " + std::to_string(sub.dim()) + " exceeds the guard " + std::to_string(g.max_dim));
    return sub;
}

// ---- distributions -------------------------------------------------------------

struct SyndromeDistribution {
    Poly2 modulus;
    std::vector<double> mass;          // indexed by the residue packed as a word
    std::vector<std::uint64_t> count;  // exact numerators; empty unless exact
    std::size_t log2_den = 0;          // exact masses are count / 2^log2_den
    DistributionClass cls = DistributionClass::Irregular;

    std::size_t degree() const { return modulus.deg(); }
    bool exact() const { return !count.empty(); }
    double at(const Poly2& r) const { return mass.at(r.word()); }

    // Residues of positive mass, in canonical order.
    std::vector<Poly2> support() const {
        std::vector<Poly2> s;
        for (std::size_t r = 0; r < mass.size(); ++r)
            if (mass[r] > 0) s.push_back(Poly2::from_word(r));
        return s;
    }
};

inline constexpr double mass_tolerance = 1e-12;

namespace detail {

inline double accurate_sum(const std::vector<double>& v) {
    double s = 0.0, c = 0.0;
    for (double x : v) {
        const double t = s + x;
        c += std::abs(s) >= std::abs(x) ? (s - t) + x : (x - t) + s;
        s = t;
    }
    return s + c;
}

}  // namespace detail

inline DistributionClass classify(const SyndromeDistribution& d, double tol = mass_tolerance) {
    const std::size_t size = d.mass.size();
    if (size != (std::size_t{1} << d.degree())) throw CorruptInput("mass table does not match the modulus");
    if (d.exact()) {
        std::uint64_t tot = 0;
        for (auto c : d.count) tot += c;
        if (tot != (std::uint64_t{1} << d.log2_den)) throw CorruptInput("exact masses do not sum to one");
    } else if (std::abs(detail::accurate_sum(d.mass) - 1.0) > tol) {
        throw CorruptInput("masses do not sum to one");
    }
    std::size_t support = 0;
    double m0 = -1.0;
    std::uint64_t c0 = 0;
    bool equal = true;
    for (std::size_t r = 0; r < size; ++r) {
        if (d.mass[r] < 0) throw CorruptInput("negative mass");
        const bool positive = d.exact() ? d.count[r] > 0 : d.mass[r] > 0;
        if (!positive) continue;
        ++support;
        if (m0 < 0) {
            m0 = d.mass[r];
            if (d.exact()) c0 = d.count[r];
        } else if (d.exact() ? d.count[r] != c0 : std::abs(d.mass[r] - m0) > tol) {
            equal = false;
        }
    }
    if (support == 1) return DistributionClass::Degenerate;
    if (!equal) return DistributionClass::Irregular;
    if (support == size) return DistributionClass::Uniform;
    const auto on = [&](std::size_t r) { return d.exact() ? d.count[r] > 0 : d.mass[r] > 0; };
    if (!on(0) || !std::has_single_bit(support)) return DistributionClass::Irregular;
    // Grow the subgroup generated by the support; it may never leave the support.
    std::vector<std::uint8_t> in(size, 0);
    std::vector<std::uint64_t> group{0};
    in[0] = 1;
    for (std::size_t r = 1; r < size && group.size() < support; ++r) {
        if (!on(r) || in[r]) continue;
        const std::size_t half = group.size();
        for (std::size_t i = 0; i < half; ++i) {
            const std::uint64_t x = group[i] ^ r;
            if (!on(x)) return DistributionClass::Irregular;
            in[x] = 1;
            group.push_back(x);
        }
    }
    return group.size() == support ? DistributionClass::RestrictedUniform : DistributionClass::Irregular;
}

enum class TallyRoute { Automatic, Enumerate, Butterfly };

// Counts of every element of span(res) reduced into 2^d residue cells; each of the
// 2^|res| combinations is counted once, so the counts sum to 2^|res|.
inline std::vector<std::uint64_t> tally_span(const std::vector<std::uint64_t>& res, std::size_t d,
                                             TallyRoute route = TallyRoute::Automatic) {
    const std::size_t dim = res.size();
    const std::size_t size = std::size_t{1} << d;
    std::vector<std::uint64_t> cnt(size, 0);
    if (route == TallyRoute::Automatic) {
        const double enumerate = std::ldexp(1.0, static_cast<int>(dim));
        const double butterfly = static_cast<double>(dim) * static_cast<double>(size) / 2;
        route = enumerate <= butterfly ? TallyRoute::Enumerate : TallyRoute::Butterfly;
    }
    if (route == TallyRoute::Enumerate) {
        std::uint64_t r = 0;
        cnt[0] = 1;
        const std::uint64_t total = std::uint64_t{1} << dim;
        for (std::uint64_t i = 1; i < total; ++i) {
            r ^= res[static_cast<std::size_t>(std::countr_zero(i))];
            ++cnt[r];
        }
        return cnt;
    }
    // Adding a generator v maps a tally c to c + (c shifted by v).
    cnt[0] = 1;
    for (auto v : res) {
        if (!v) {
            for (auto& x : cnt) x *= 2;
            continue;
        }
        const std::uint64_t hb = std::uint64_t{1} << word::top(v);
        for (std::uint64_t base = 0; base < size; base += 2 * hb)
            for (std::uint64_t r = base; r < base + hb; ++r) {
                const std::uint64_t a = cnt[r], b = cnt[r ^ v];
                cnt[r] = cnt[r ^ v] = a + b;
            }
    }
    return cnt;
}

namespace detail {

inline std::size_t check_modulus(std::size_t n, const Poly2& f, const Guards& g) {
    if (f.is_zero() || !divides(f, Poly2::xn1(n))) throw DomainError("f does not divide X^" + std::to_string(n) + "+1");
    const std::size_t d = f.deg();
    if (d < 1 || d >= n) throw DomainError("need 1 <= deg f < n");
    if (d > g.max_deg_f)
        throw ResourceError("deg f = " + std::to_string(d) + " exceeds the guard " + std::to_string(g.max_deg_f));
    return d;
}

}  // namespace detail

inline SyndromeDistribution distribution_from_counts(const Poly2& f, std::vector<std::uint64_t> cnt, std::size_t log2_den) {
    SyndromeDistribution d;
    d.modulus = f;
    d.mass.resize(cnt.size());
    const double scale = std::ldexp(1.0, -static_cast<int>(log2_den));
    for (std::size_t r = 0; r < cnt.size(); ++r) d.mass[r] = static_cast<double>(cnt[r]) * scale;
    d.count = std::move(cnt);
    d.log2_den = log2_den;
    d.cls = classify(d);
    return d;
}

// Distribution of w(X) mod f for w uniform on span(basis).
inline SyndromeDistribution span_distribution(const std::vector<std::uint64_t>& basis, std::size_t n, const Poly2& f,
                                              TallyRoute route = TallyRoute::Automatic) {
    const ResidueMap rm(n, f);
    std::vector<std::uint64_t> res;
    res.reserve(basis.size());
    for (auto b : basis) res.push_back(rm(b));
    return distribution_from_counts(f, tally_span(res, f.deg(), route), basis.size());
}

inline SyndromeDistribution exact_distribution(const SubspaceSpec& s, const Poly2& f, const Guards& g = {},
                                               TallyRoute route = TallyRoute::Automatic) {
    const std::size_t n = length_of(s);
    detail::check_modulus(n, f, g);
    const Subspace sub = build_subspace(s, g);
    return span_distribution(sub.basis, n, f, route);
}

// Same tally kept as (residue, count) pairs sorted by residue. Small subspaces under a
// high-degree modulus touch few cells, so this avoids the 2^deg f table.
struct SparseDistribution {
    Poly2 modulus;
    std::vector<std::uint64_t> residue;
    std::vector<std::uint64_t> count;
    std::size_t log2_den = 0;
    DistributionClass cls = DistributionClass::Irregular;

    double mass_at(std::uint64_t r) const {
        auto it = std::lower_bound(residue.begin(), residue.end(), r);
        if (it == residue.end() || *it != r) return 0.0;
        return std::ldexp(static_cast<double>(count[it - residue.begin()]), -static_cast<int>(log2_den));
    }
};

inline DistributionClass classify(const SparseDistribution& d) {
    const std::size_t support = d.residue.size();
    const std::size_t size = std::size_t{1} << d.modulus.deg();
    if (support == 0 || support > size) throw CorruptInput("empty or oversized support");
    if (!std::is_sorted(d.residue.begin(), d.residue.end())) throw CorruptInput("unsorted support");
    std::uint64_t tot = 0;
    for (auto c : d.count) tot += c;
    if (tot != (std::uint64_t{1} << d.log2_den)) throw CorruptInput("exact masses do not sum to one");
    if (support == 1) return DistributionClass::Degenerate;
    if (std::adjacent_find(d.count.begin(), d.count.end(), std::not_equal_to<>()) != d.count.end())
        return DistributionClass::Irregular;
    if (support == size) return DistributionClass::Uniform;
    if (d.residue[0] != 0 || !std::has_single_bit(support)) return DistributionClass::Irregular;
    const auto on = [&](std::uint64_t r) { return std::binary_search(d.residue.begin(), d.residue.end(), r); };
    std::vector<std::uint64_t> group{0};
    Echelon gens;
    for (std::size_t i = 1; i < support && group.size() < support; ++i) {
        const std::uint64_t r = d.residue[i];
        if (gens.contains(r)) continue;
        gens.insert(r);
        const std::size_t half = group.size();
        for (std::size_t j = 0; j < half; ++j) {
            const std::uint64_t x = group[j] ^ r;
            if (!on(x)) return DistributionClass::Irregular;
            group.push_back(x);
        }
    }
    return group.size() == support ? DistributionClass::RestrictedUniform : DistributionClass::Irregular;
}

inline SparseDistribution sparse_span_distribution(const std::vector<std::uint64_t>& basis, std::size_t n, const Poly2& f) {
    const ResidueMap rm(n, f);
    const std::size_t dim = basis.size(), d = f.deg();
    std::vector<std::uint64_t> res;
    res.reserve(dim);
    for (auto b : basis) res.push_back(rm(b));
    SparseDistribution out;
    out.modulus = f;
    out.log2_den = dim;
    if (dim + 2 < d) {
        std::vector<std::uint64_t> all(std::size_t{1} << dim);
        std::uint64_t r = 0;
        for (std::uint64_t i = 1; i < all.size(); ++i) all[i] = r ^= res[static_cast<std::size_t>(std::countr_zero(i))];
        std::sort(all.begin(), all.end());
        for (std::size_t i = 0; i < all.size();) {
            std::size_t j = i;
            while (j < all.size() && all[j] == all[i]) ++j;
            out.residue.push_back(all[i]);
            out.count.push_back(j - i);
            i = j;
        }
    } else {
        const auto cnt = tally_span(res, d);
        for (std::uint64_t r = 0; r < cnt.size(); ++r)
            if (cnt[r]) out.residue.push_back(r), out.count.push_back(cnt[r]);
    }
    out.cls = classify(out);
    return out;
}

inline SparseDistribution exact_sparse_distribution(const SubspaceSpec& s, const Poly2& f, const Guards& g = {}) {
    const std::size_t n = length_of(s);
    detail::check_modulus(n, f, g);
    return sparse_span_distribution(build_subspace(s, g).basis, n, f);
}

inline SyndromeDistribution to_dense(const SparseDistribution& sp) {
    std::vector<std::uint64_t> cnt(std::size_t{1} << sp.modulus.deg(), 0);
    for (std::size_t i = 0; i < sp.residue.size(); ++i) cnt[sp.residue[i]] = sp.count[i];
    return distribution_from_counts(sp.modulus, std::move(cnt), sp.log2_den);
}

// ---- theorem machinery -------------------------------------------------------

// Restricted-uniform criterion for truncations: some divisor m_perp of g0_perp with
// order n' < n0, n = b n', deg m_perp > k0 - deg f, and f | m (1 + X^n' + ... + X^{(b-1)n'}).
inline bool theorem1_restricted_uniform_test(const CyclicCode& code, std::size_t n, const Poly2& f) {
    const std::size_t n0 = code.n(), k0 = code.k();
    if (code.trivial() || is_degenerate_code(code)) throw DomainError("the restricted-uniform test needs a nontrivial non-degenerate code");
    if (!(k0 < n && n < n0)) throw DomainError("the restricted-uniform test needs k0 < n < n0");
    if (f.is_zero() || f.deg() > k0 || !divides(f, Poly2::xn1(n))) throw DomainError("the restricted-uniform test needs f | X^n+1 with deg f <= k0");
    const std::size_t df = f.deg();
    const auto base = factor_over(code.g_dual(), factor_xn1(n0));
    for (const Poly2& mp : divisors(base)) {
        if (mp.deg() == 0) continue;
        if (mp.deg() + df <= k0) continue;
        const std::uint64_t np = order(mp);
        if (np >= n0 || n % np) continue;
        const BitSeq w = impulse_sequence(mp, np);
        const Poly2 m = minimal_generating_polynomial(w);
        Poly2 rep;
        for (std::size_t i = 0; i < n; i += np) rep.flip(i);
        if (divides(f, m * rep)) return true;
    }
    return false;
}

namespace detail {

inline DistributionClass class_of_rank(std::size_t rank, std::size_t df) {
    if (rank == 0) return DistributionClass::Degenerate;
    if (rank == df) return DistributionClass::Uniform;
    return DistributionClass::RestrictedUniform;
}

// Support of X^shift * (component codeword) mod f, from the component basis.
inline std::vector<std::uint64_t> component_support(const Component& c, const ResidueMap& rm) {
    Echelon e;
    for (auto b : c.basis) e.insert(rm(b));
    return e.rows();
}

// Composite class from the sum of the component supports.
inline DistributionClass predict_by_components(const SubspaceSpec& s, const Poly2& f) {
    const std::size_t n = length_of(s), df = f.deg();
    const ResidueMap rm(n, f);
    Echelon total;
    for (const auto& c : components(s)) {
        const auto sup = component_support(c, rm);
        if (sup.size() == df) return DistributionClass::Uniform;
        for (auto v : sup) total.insert(v);
    }
    return class_of_rank(total.rank(), df);
}

inline DistributionClass predict_truncation(const CyclicCode& code, std::size_t n, const Poly2& f) {
    const std::size_t k0 = code.k();
    if (n <= k0) return DistributionClass::Uniform;
    if (f.deg() > k0) return DistributionClass::RestrictedUniform;
    return theorem1_restricted_uniform_test(code, n, f) ? DistributionClass::RestrictedUniform : DistributionClass::Uniform;
}

}  // namespace detail

inline DistributionClass predict_class(const SubspaceSpec& s, const Poly2& f) {
    validate(s);
    const std::size_t n = length_of(s);
    if (n > max_word_length) throw ResourceError("block length exceeds 64");
    if (f.is_zero() || !divides(f, Poly2::xn1(n)) || f.deg() < 1 || f.deg() >= n)
        throw DomainError("predict_class needs f | X^n+1 with 1 <= deg f < n");
    const CyclicCode& code = code_of(s);
    if (code.k() == 0) return DistributionClass::Degenerate;
    if (code.k() == code.n()) return DistributionClass::Uniform;
    if (is_degenerate_code(code)) return detail::predict_by_components(s, f);

    if (auto t = std::get_if<Truncation>(&s)) return detail::predict_truncation(code, t->n, f);

    const auto& b = std::get<BoundarySpan>(s);
    if (b.d1 == 0 && b.d2 == 0 && divides(f, Poly2::xn1(code.n()))) {
        // Every block is a sum of whole codewords; mod f their residues fill the ideal (gcd(g0, f)).
        const Poly2 d = gcd(code.g(), f);
        if (d == f) return DistributionClass::Degenerate;
        if (d.deg() == 0) return DistributionClass::Uniform;
        return DistributionClass::RestrictedUniform;
    }
    // A boundary span contains the truncation of the same length.
    if (n < code.n() && detail::predict_truncation(code, n, f) == DistributionClass::Uniform)
        return DistributionClass::Uniform;
    return detail::predict_by_components(s, f);
}

inline DistributionClass predict_class(const CyclicCode& code, const BlockType& b, std::size_t n, const Poly2& f) {
    return predict_class(to_spec(code, b, n), f);
}

// ---- noise ---------------------------------------------------------------------

// Distribution of e(X) mod f for e with iid Bernoulli(p) coordinates, i < n.
inline SyndromeDistribution error_residue_distribution(std::size_t n, const Poly2& f, double p, const Guards& g = {}) {
    require_probability(p);
    if (f.is_zero() || f.deg() < 1) throw DomainError("need deg f >= 1");
    if (f.deg() > g.max_deg_f)
        throw ResourceError("deg f = " + std::to_string(f.deg()) + " exceeds the guard " + std::to_string(g.max_deg_f));
    const std::size_t size = std::size_t{1} << f.deg();
    std::vector<double> m(size, 0.0);
    m[0] = 1.0;
    const std::uint64_t fw = f.word();
    const int df = word::top(fw);
    std::uint64_t x = 1;
    for (std::size_t i = 0; i < n; ++i) {
        if (p > 0 && x) {
            const std::uint64_t hb = std::uint64_t{1} << word::top(x);
            for (std::uint64_t r = 0; r < size; ++r) {
                if (r & hb) continue;
                const double a = m[r], b = m[r ^ x];
                m[r] = (1 - p) * a + p * b;
                m[r ^ x] = (1 - p) * b + p * a;
            }
        }
        x <<= 1;
        if ((x >> df) & 1) x ^= fw;
    }
    SyndromeDistribution d;
    d.modulus = f;
    d.mass = std::move(m);
    d.cls = classify(d);
    return d;
}

namespace detail {

inline void walsh_hadamard(std::vector<double>& a) {
    for (std::size_t h = 1; h < a.size(); h <<= 1)
        for (std::size_t i = 0; i < a.size(); i += 2 * h)
            for (std::size_t j = i; j < i + h; ++j) {
                const double x = a[j], y = a[j + h];
                a[j] = x + y;
                a[j + h] = x - y;
            }
}

}  // namespace detail

// Distribution of the sum of independent residues drawn from a and b.
inline SyndromeDistribution convolve(const SyndromeDistribution& a, const SyndromeDistribution& b) {
    if (a.modulus != b.modulus) throw DomainError("convolution of distributions with different moduli");
    const std::size_t size = a.mass.size();
    if (b.mass[0] == 1.0) return a;
    SyndromeDistribution out;
    out.modulus = a.modulus;
    if (a.cls == DistributionClass::Irregular) {
        std::vector<double> x = a.mass, y = b.mass;
        detail::walsh_hadamard(x);
        detail::walsh_hadamard(y);
        for (std::size_t i = 0; i < size; ++i) x[i] *= y[i];
        detail::walsh_hadamard(x);
        const double inv = 1.0 / static_cast<double>(size);
        for (auto& v : x) v = std::max(0.0, v * inv);
        out.mass = std::move(x);
    } else {
        // a is uniform on a coset x0 + S: out[r] = |S|^-1 * sum over s in S of b[r + x0 + s].
        std::uint64_t x0 = size;
        std::size_t pts = 0;
        for (std::uint64_t r = 0; r < size; ++r)
            if (a.mass[r] > 0) x0 = std::min(x0, r), ++pts;
        const auto rank = static_cast<std::size_t>(std::bit_width(pts) - 1);
        Echelon span;
        for (std::uint64_t r = x0; r < size && span.rank() < rank; ++r)
            if (a.mass[r] > 0) span.insert(r ^ x0);
        // Reduction modulo S is linear, so tabulate it on the low and high halves of a
        // residue; every coset then collapses to one representative.
        const std::size_t d = a.degree(), lo_bits = d / 2;
        std::vector<std::uint64_t> lo(std::size_t{1} << lo_bits), hi(std::size_t{1} << (d - lo_bits));
        for (std::uint64_t i = 0; i < lo.size(); ++i) lo[i] = span.reduce(i);
        for (std::uint64_t i = 0; i < hi.size(); ++i) hi[i] = span.reduce(i << lo_bits);
        const std::uint64_t lo_mask = lo.size() - 1;
        auto rep = [&](std::uint64_t r) { return lo[r & lo_mask] ^ hi[r >> lo_bits]; };
        std::vector<double> coset(size, 0.0), carry(size, 0.0);
        for (std::uint64_t r = 0; r < size; ++r) {
            double& acc = coset[rep(r)];
            const double x = b.mass[r], t = acc + x;
            carry[rep(r)] += std::abs(acc) >= std::abs(x) ? (acc - t) + x : (x - t) + acc;
            acc = t;
        }
        const double inv = 1.0 / static_cast<double>(pts);
        out.mass.resize(size);
        for (std::uint64_t r = 0; r < size; ++r) {
            const std::uint64_t c = rep(r ^ x0);
            out.mass[r] = (coset[c] + carry[c]) * inv;
        }
    }
    out.cls = classify(out);
    return out;
}

inline SyndromeDistribution noisy_distribution(const SubspaceSpec& s, const Poly2& f, double p, const Guards& g = {}) {
    const auto clean = exact_distribution(s, f, g);
    return convolve(clean, error_residue_distribution(length_of(s), f, p, g));
}

}  // namespace cyclicid

#endif
