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

#ifndef CYCLICID_VERIFY_HPP
#define CYCLICID_VERIFY_HPP

// Invariant sweeps shared by `cyclicid verify` and the acceptance tests. Every check
// compares an enumeration against a closed form or a theorem's prediction and
// counts checked / failed / skipped instances.

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <deque>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "blind_recon.hpp"
#include "cyclic_code.hpp"
#include "linalg.hpp"
#include "lrs.hpp"
#include "parallel.hpp"
#include "poly_text.hpp"
#include "syndrome_dist.hpp"
#include "xn1.hpp"

namespace cyclicid::verify {

struct Tally {
    std::string name;
    std::uint64_t checked = 0, failed = 0, skipped = 0;
    std::uint64_t exceptions = 0;  // informational, never a failure
    std::vector<std::string> failures;  // first few only
    std::vector<std::string> notes;

    void check(bool ok, const std::string& what = {}) {
        ++checked;
        if (ok) return;
        ++failed;
        if (failures.size() < 8) failures.push_back(what);
    }
};

class Report {
   public:
    Tally& operator[](std::string_view name) {
        for (auto& t : items_)
            if (t.name == name) return t;
        Tally t;
        t.name = std::string(name);
        items_.push_back(std::move(t));
        return items_.back();
    }

    void merge(const Report& o) {
        for (const auto& t : o.items_) {
            Tally& m = (*this)[t.name];
            m.checked += t.checked;
            m.failed += t.failed;
            m.skipped += t.skipped;
            m.exceptions += t.exceptions;
            for (const auto& f : t.failures)
                if (m.failures.size() < 8) m.failures.push_back(f);
            for (const auto& n : t.notes)
                if (std::find(m.notes.begin(), m.notes.end(), n) == m.notes.end() && m.notes.size() < 8) m.notes.push_back(n);
        }
    }

    bool ok() const {
        return std::all_of(items_.begin(), items_.end(), [](const Tally& t) { return t.failed == 0; });
    }

    const std::deque<Tally>& items() const { return items_; }

    const Tally* find(std::string_view name) const {
        for (const auto& t : items_)
            if (t.name == name) return &t;
        return nullptr;
    }

    std::string format() const {
        std::string s;
        for (const auto& t : items_) {
            s += std::string(t.failed ? "FAIL " : "ok   ") + t.name + ": checked=" + std::to_string(t.checked) +
                 " failed=" + std::to_string(t.failed) + " skipped=" + std::to_string(t.skipped) +
                 (t.exceptions ? " exceptions=" + std::to_string(t.exceptions) : std::string()) + "\n";
            for (const auto& f : t.failures) s += "       ! " + f + "\n";
            for (const auto& n : t.notes) s += "       - " + n + "\n";
        }
        return s;
    }

   private:
    std::deque<Tally> items_;  // deque: references from operator[] survive later inserts
};

struct Options {
    std::vector<std::size_t> n0s{7, 15};
    std::size_t jobs = 0;
    Guards guards;
    std::vector<double> noisy_p{0.01, 0.05, 0.1};
    std::vector<double> decision_p{0.01, 0.05};
    std::uint64_t seed = 20260101;
};

// ---- sweep parameter space ---------------------------------------------------------

inline std::vector<CyclicCode> sweep_codes(std::size_t n0) {
    std::vector<CyclicCode> out;
    for (const auto& g : divisors_xn1(n0)) {
        CyclicCode c(n0, g);
        if (c.trivial() || is_degenerate_code(c)) continue;
        out.push_back(c);
    }
    return out;
}

inline bool same_spec(const SubspaceSpec& a, const SubspaceSpec& b) {
    if (a.index() != b.index()) return false;
    if (auto t = std::get_if<Truncation>(&a)) return t->n == std::get<Truncation>(b).n;
    const auto& x = std::get<BoundarySpan>(a);
    const auto& y = std::get<BoundarySpan>(b);
    return x.d1 == y.d1 && x.q == y.q && x.d2 == y.d2;
}

// Distinct subspace models met by blocks j = 1, 2, ... for every offset s (s0 = 0;
// the offsets repeat with period n0 / gcd(n, n0)).
inline std::vector<SubspaceSpec> reachable_specs(const CyclicCode& c, std::size_t n) {
    const std::size_t n0 = c.n();
    const std::size_t period = n0 / std::gcd(n, n0);
    std::vector<SubspaceSpec> out;
    for (std::size_t s = 0; s < n; ++s)
        for (std::size_t j = 1; j <= period; ++j) {
            SubspaceSpec sp = to_spec(c, block_decomposition(n0, n, s, 0, j), n);
            if (std::none_of(out.begin(), out.end(), [&](const SubspaceSpec& o) { return same_spec(o, sp); }))
                out.push_back(sp);
        }
    return out;
}

inline std::vector<Poly2> nontrivial_divisors(std::size_t n) {
    std::vector<Poly2> out;
    for (auto& f : divisors_xn1(n))
        if (f.deg() >= 1 && f.deg() < n) out.push_back(f);
    return out;
}

inline bool is_correct_parameters(const SubspaceSpec& s, const Poly2& f) {
    auto b = std::get_if<BoundarySpan>(&s);
    return b && b->d1 == 0 && b->d2 == 0 && divides(f, b->code.g());
}

namespace detail {

inline std::string tag(const CyclicCode& c, const SubspaceSpec& s, const Poly2& f) {
    return "n0=" + std::to_string(c.n()) + " g0=" + to_bits(c.g()) + " n=" + std::to_string(length_of(s)) + " " +
           describe(s) + " f=" + to_bits(f);
}

// Canonical basis of the span of the support; the support of a noise-free tally
// is that span, so a full-rank prefix suffices.
inline std::vector<std::uint64_t> support_key(const SparseDistribution& d) {
    Echelon e;
    const auto full = static_cast<std::size_t>(std::bit_width(d.residue.size()) - 1);
    for (std::size_t i = 0; i < d.residue.size() && e.rank() < full; ++i) e.insert(d.residue[i]);
    return e.canonical();
}

struct NoisyFacts {
    std::vector<double> zero;
    std::vector<char> uniform, equal_on_support;
};

}  // namespace detail

struct SweepFlags {
    bool exact = true, noisy = true, bounds = true;
};

// The cross-validation sweep over (n0, g0, n, reachable spec, f).
inline Report theorem_sweep(const Options& opt, SweepFlags flags) {
    struct Item {
        std::size_t n0, n;
        Poly2 f;
    };
    std::map<std::size_t, std::vector<CyclicCode>> codes;
    std::vector<Item> items;
    Report skipped;
    for (std::size_t n0 : opt.n0s) {
        codes[n0] = sweep_codes(n0);
        const std::size_t top = std::min(2 * n0 + 2, opt.guards.max_block);
        if (2 * n0 + 2 > top)
            skipped["cross-validation"].notes.push_back("n0=" + std::to_string(n0) + ": block lengths above " +
                                                        std::to_string(top) + " are outside the block-length guard");
        for (std::size_t n = 2; n <= top; ++n)
            for (auto& f : nontrivial_divisors(n)) items.push_back({n0, n, f});
    }
    const bool need_noise = flags.noisy || flags.bounds;
    std::vector<Report> out(items.size());

    parallel_for(items.size(), opt.jobs, [&](std::size_t idx) {
        const Item& it = items[idx];
        Report& R = out[idx];
        const std::size_t n = it.n, df = it.f.deg();
        const auto& cs = codes.at(it.n0);
        if (df > opt.guards.max_deg_f) {
            for (const auto& c : cs) R["cross-validation"].skipped += reachable_specs(c, n).size();
            return;
        }
        const std::size_t np = opt.noisy_p.size();
        std::vector<SyndromeDistribution> err;
        std::vector<double> p0(np), bound(np), tau(np);
        if (need_noise) {
            for (std::size_t i = 0; i < np; ++i) {
                const double p = opt.noisy_p[i];
                err.push_back(error_residue_distribution(n, it.f, p, opt.guards));
                p0[i] = p_zero_syndrome(n, it.f, p, opt.guards);
                const double lam = lambda_coeff(n, df, p);
                bound[i] = p0[i] * (lam + 1) / 2;
                tau[i] = (p0[i] + bound[i]) / 2;
                if (flags.bounds) {
                    R["P(C) weight sum equals residue DP"].check(std::abs(err[i].mass[0] - p0[i]) <= 1e-12,
                                                                 "n=" + std::to_string(n) + " f=" + to_bits(it.f));
                    R["bound below p0"].check(bound[i] < p0[i], "n=" + std::to_string(n) + " f=" + to_bits(it.f));
                }
            }
        }
        std::map<std::vector<std::uint64_t>, detail::NoisyFacts> cache;

        for (const auto& c : cs) {
            const auto specs = reachable_specs(c, n);
            std::vector<std::pair<const SubspaceSpec*, DistributionClass>> seen;
            std::optional<DistributionClass> trunc;
            for (const auto& sp : specs) {
                SparseDistribution ex;
                try {
                    ex = exact_sparse_distribution(sp, it.f, opt.guards);
                } catch (const ResourceError&) {
                    R["cross-validation"].skipped++;
                    continue;
                }
                const std::string where = detail::tag(c, sp, it.f);
                const bool correct = is_correct_parameters(sp, it.f);
                seen.emplace_back(&sp, ex.cls);
                if (std::holds_alternative<Truncation>(sp)) trunc = ex.cls;

                if (flags.exact) {
                    const DistributionClass pred = predict_class(sp, it.f);
                    R["cross-validation"].check(pred == ex.cls, where + " predicted=" + std::string(class_name(pred)) +
                                                                    " exact=" + std::string(class_name(ex.cls)));
                    R["degenerate iff aligned and f | g0"].check((ex.cls == DistributionClass::Degenerate) == correct, where);
                    R["noise-free never irregular"].check(ex.cls != DistributionClass::Irregular, where);
                    if (!correct)
                        R["incorrect parameters give uniform or restricted uniform"].check(
                            ex.cls == DistributionClass::Uniform || ex.cls == DistributionClass::RestrictedUniform, where);
                    if (std::holds_alternative<Truncation>(sp) && n <= c.k())
                        R["truncation with n <= k0 is uniform"].check(ex.cls == DistributionClass::Uniform, where);
                    if (std::holds_alternative<BoundarySpan>(sp)) {
                        // Component-wise: each summand enumerated on its own.
                        const auto comps = components(sp);
                        bool all_uniform = true, any_uniform = false, any_ru = false;
                        std::size_t live = 0;
                        Echelon sum;
                        for (const auto& comp : comps) {
                            const auto cd = sparse_span_distribution(comp.basis, n, it.f);
                            if (cd.cls == DistributionClass::Degenerate) continue;
                            ++live;
                            all_uniform &= cd.cls == DistributionClass::Uniform;
                            any_uniform |= cd.cls == DistributionClass::Uniform;
                            any_ru |= cd.cls == DistributionClass::RestrictedUniform;
                            for (auto v : detail::support_key(cd)) sum.insert(v);
                        }
                        if (live && all_uniform)
                            R["all-uniform components give a uniform block"].check(ex.cls == DistributionClass::Uniform, where);
                        const DistributionClass by_sum = sum.rank() == 0   ? DistributionClass::Degenerate
                                                         : sum.rank() == df ? DistributionClass::Uniform
                                                                            : DistributionClass::RestrictedUniform;
                        R["block support is the sum of component supports"].check(by_sum == ex.cls, where);
                        if (any_ru && !any_uniform) {
                            auto& t = R["restricted components without a uniform one, uniform composite (informational)"];
                            ++t.checked;
                            if (ex.cls == DistributionClass::Uniform) {
                                ++t.exceptions;
                                if (t.notes.size() < 3) t.notes.push_back("uniform composite: " + where);
                            }
                        }
                    }
                }

                if (!need_noise || ex.cls == DistributionClass::Irregular) continue;
                auto key = detail::support_key(ex);
                auto hit = cache.find(key);
                if (hit == cache.end()) {
                    detail::NoisyFacts nf;
                    const auto dense = to_dense(ex);
                    for (std::size_t i = 0; i < np; ++i) {
                        const auto nd = convolve(dense, err[i]);
                        nf.zero.push_back(nd.mass[0]);
                        nf.uniform.push_back(nd.cls == DistributionClass::Uniform);
                        double lo = 2, hi = -1;
                        for (auto r : ex.residue) lo = std::min(lo, nd.mass[r]), hi = std::max(hi, nd.mass[r]);
                        nf.equal_on_support.push_back(hi - lo <= mass_tolerance);
                    }
                    hit = cache.emplace(std::move(key), std::move(nf)).first;
                }
                const auto& nf = hit->second;
                for (std::size_t i = 0; i < np; ++i) {
                    const std::string at = where + " p=" + std::to_string(opt.noisy_p[i]);
                    if (flags.noisy) {
                        if (ex.cls == DistributionClass::Uniform) R["noise keeps uniform uniform"].check(nf.uniform[i], at);
                        if (ex.cls == DistributionClass::RestrictedUniform)
                            R["noisy masses equal on the noise-free support"].check(nf.equal_on_support[i], at);
                    }
                    if (flags.bounds && !correct) {
                        R["zero mass within P(C)(lambda+1)/2"].check(nf.zero[i] <= bound[i] * (1 + 1e-12), at);
                        if (std::find(opt.decision_p.begin(), opt.decision_p.end(), opt.noisy_p[i]) != opt.decision_p.end())
                            R["incorrect parameters fall below tau"].check(nf.zero[i] < tau[i], at);
                    }
                }
            }
            if (flags.exact && trunc && *trunc == DistributionClass::Uniform)
                for (const auto& [sp, cls] : seen)
                    if (std::holds_alternative<BoundarySpan>(*sp))
                        R["uniform truncation gives uniform boundary spans"].check(cls == DistributionClass::Uniform,
                                                                                   detail::tag(c, *sp, it.f));
        }
    });

    Report total;
    total.merge(skipped);
    for (const auto& r : out) total.merge(r);
    return total;
}

// ---- algebra and code-level properties ----------------------------------------

namespace detail {

inline Poly2 random_poly(std::mt19937_64& g, std::size_t max_deg) {
    Poly2 p;
    const std::size_t d = g() % (max_deg + 1);
    for (std::size_t i = 0; i <= d; ++i)
        if (g() & 1) p.flip(i);
    return p;
}

// Dual membership by the orthogonality definition: h . r = 0 for every generator row.
inline bool orthogonal_to_rows(std::uint64_t h, const std::vector<std::uint64_t>& rows) {
    return std::all_of(rows.begin(), rows.end(), [h](std::uint64_t r) { return word::parity(r & h) == 0; });
}

}  // namespace detail

inline Report algebra_suite(const Options& opt) {
    Report R;
    std::mt19937_64 rng(opt.seed);
    {
        auto& t = R["ring axioms"];
        for (int i = 0; i < 500; ++i) {
            const Poly2 a = detail::random_poly(rng, 150), b = detail::random_poly(rng, 150), c = detail::random_poly(rng, 150);
            t.check((a + b) + c == a + (b + c) && (a * b) * c == a * (b * c) && a * (b + c) == a * b + a * c &&
                        (a + a).is_zero() && a * b == b * a,
                    to_bits(a));
        }
    }
    {
        auto& t = R["division identity"];
        for (int i = 0; i < 500; ++i) {
            const Poly2 a = detail::random_poly(rng, 200);
            Poly2 m = detail::random_poly(rng, 90);
            if (m.is_zero()) m = Poly2::from_word(1);
            auto [q, r] = divmod(a, m);
            t.check(q * m + r == a && (r.is_zero() || r.deg() < m.deg()), to_bits(a) + " / " + to_bits(m));
        }
    }
    {
        auto& t = R["reciprocal degree and product"];
        for (int i = 0; i < 300; ++i) {
            Poly2 a = detail::random_poly(rng, 80), b = detail::random_poly(rng, 80);
            if (!a[0]) a.flip(0);
            if (!b[0]) b.flip(0);
            t.check(reciprocal(a).deg() == a.deg() && reciprocal(a * b) == reciprocal(a) * reciprocal(b) &&
                        reciprocal(reciprocal(a)) == a,
                    to_bits(a));
        }
    }
    {
        auto& fac = R["X^n+1 factorization (n <= 40)"];
        auto& ord = R["factor orders divide n (n <= 40)"];
        for (std::size_t n = 1; n <= 40; ++n) {
            const auto fm = factor_xn1(n);
            bool irr = std::all_of(fm.entries.begin(), fm.entries.end(), [](const auto& e) { return is_irreducible(e.first); });
            fac.check(fm.product() == Poly2::xn1(n) && irr, "n=" + std::to_string(n));
            for (const auto& [f, e] : fm.entries) ord.check(n % order(f) == 0, "n=" + std::to_string(n) + " f=" + to_bits(f));
        }
    }
    {
        auto& t = R["minimal polynomial order equals least period (period <= 15)"];
        for (std::size_t L = 1; L <= 15; ++L)
            for (std::uint64_t v = 1; v < (std::uint64_t{1} << L); ++v) {
                BitSeq s(2 * L);
                for (std::size_t i = 0; i < 2 * L; ++i) s[i] = static_cast<std::uint8_t>((v >> (i % L)) & 1);
                const std::span<const std::uint8_t> one(s.data(), L);
                if (least_period(one) != L) continue;
                const Poly2 h = lrs_minimal_polynomial(s).minimal;
                t.check(order(h) == L, "period " + std::to_string(L) + " seq " + to_bits(v, L));
            }
    }
    {
        // Every nontrivial cyclic code up to length 16 with k <= 12.
        auto& t = R["inner products split evenly off the dual"];
        for (std::size_t n = 2; n <= 16; ++n)
            for (const auto& g : divisors_xn1(n)) {
                const CyclicCode c(n, g);
                if (c.k() == 0 || c.k() > 12) continue;
                const std::uint64_t gd = c.g_dual().word();
                for (int i = 0; i < 200; ++i) {
                    std::uint64_t h = rng() & word::mask(n);
                    if (i % 2) h = word::clmul(rng() & word::mask(c.k() == n ? 0 : n - c.k()), gd) & word::mask(n);
                    std::uint64_t zeros = 0;
                    for (auto v : codewords(c)) zeros += word::parity(v & h) == 0;
                    const bool in_dual = divides(c.g_dual(), Poly2::from_word(h));
                    const std::uint64_t want = in_dual ? (std::uint64_t{1} << c.k()) : (std::uint64_t{1} << (c.k() - 1));
                    t.check(zeros == want, "n=" + std::to_string(n) + " g=" + to_bits(g) + " h=" + to_bits(h, n));
                }
            }
    }
    {
        auto& t = R["prefix or suffix of a non-dual vector is non-dual"];
        for (std::size_t n : {std::size_t{7}, std::size_t{15}})
            for (const auto& g : divisors_xn1(n)) {
                const CyclicCode c(n, g);
                if (c.k() == 0) continue;
                const auto rows = generator_rows(c);
                for (std::size_t d1 = 1; d1 < n; ++d1) {
                    const std::size_t d2 = n - d1;
                    std::vector<std::uint64_t> pre, suf;
                    for (auto r : rows) pre.push_back(r & word::mask(d1)), suf.push_back(r >> d1);
                    for (std::uint64_t h = 0; h < (std::uint64_t{1} << n); ++h) {
                        if (detail::orthogonal_to_rows(h, rows)) continue;
                        const bool c1 = !detail::orthogonal_to_rows(h & word::mask(d1), pre);
                        const bool c2 = !detail::orthogonal_to_rows(h >> d1, suf);
                        (void)d2;
                        t.check(c1 || c2, "n=" + std::to_string(n) + " g=" + to_bits(g) + " d1=" + std::to_string(d1));
                    }
                }
            }
    }
    {
        auto& t = R["degenerate-pattern codeword iff a dual factor has order < n"];
        for (std::size_t n : {std::size_t{7}, std::size_t{15}})
            for (const auto& g : divisors_xn1(n)) {
                const CyclicCode c(n, g);
                bool scan = false;
                for (auto v : codewords(c)) {
                    if (!v) continue;
                    BitSeq b(n);
                    for (std::size_t i = 0; i < n; ++i) b[i] = static_cast<std::uint8_t>((v >> i) & 1);
                    if (is_degenerate_pattern(b).degenerate) {
                        scan = true;
                        break;
                    }
                }
                bool pred = false;
                for (const auto& d : divisors(factor_over(c.g_dual(), factor_xn1(n))))
                    if (d.deg() >= 1 && order(d) < n) pred = true;
                t.check(scan == pred, "n=" + std::to_string(n) + " g=" + to_bits(g));
            }
    }
    {
        auto& t = R["syndrome basis spans the dual code"];
        for (std::size_t n = 4; n <= 16; ++n)
            for (const auto& f : nontrivial_divisors(n)) {
                const auto h = syndrome_basis(n, f);
                const CyclicCode dual(n, reciprocal(divide_exact(Poly2::xn1(n), f)));
                Echelon a, b;
                for (auto v : h) a.insert(v);
                for (auto v : generator_rows(dual)) b.insert(v);
                t.check(a.rank() == f.deg() && a.canonical() == b.canonical(), "n=" + std::to_string(n) + " f=" + to_bits(f));
            }
    }
    {
        auto& t = R["P(C) weight sum equals residue DP"];
        for (std::size_t n = 2; n <= 16; ++n)
            for (const auto& f : nontrivial_divisors(n))
                for (double p : {0.0, 0.01, 0.1, 0.5}) {
                    const double a = p_zero_syndrome_code(CyclicCode(n, f), p);
                    const double b = error_residue_distribution(n, f, p).mass[0];
                    t.check(std::abs(a - b) <= 1e-12, "n=" + std::to_string(n) + " f=" + to_bits(f));
                }
    }
    return R;
}

// Coset masses P[e in C(n,f) + a] by walking all 2^n error patterns.
inline Report coset_suite(const Options& opt) {
    Report R;
    auto& stated = R["coset ratio P(C)/P(G) >= lambda"];
    auto& used = R["coset mass P(G) <= lambda P(C)"];
    (void)opt;
    for (std::size_t n = 4; n <= 12; ++n)
        for (const auto& f : nontrivial_divisors(n)) {
            const ResidueMap rm(n, f);
            for (double p : {0.05, 0.1}) {
                std::vector<double> w(n + 1);
                for (std::size_t i = 0; i <= n; ++i)
                    w[i] = std::pow(p, static_cast<double>(i)) * std::pow(1 - p, static_cast<double>(n - i));
                std::vector<double> coset(std::size_t{1} << f.deg(), 0.0);
                for (std::uint64_t e = 0; e < (std::uint64_t{1} << n); ++e)
                    coset[rm(e)] += w[static_cast<std::size_t>(std::popcount(e))];
                const double lam = lambda_coeff(n, f.deg(), p);
                for (std::size_t a = 1; a < coset.size(); ++a) {
                    const std::string at = "n=" + std::to_string(n) + " f=" + to_bits(f) + " p=" + std::to_string(p);
                    stated.check(coset[0] / coset[a] >= lam, at);
                    used.check(coset[a] <= lam * coset[0] * (1 + 1e-12), at);
                }
            }
        }
    return R;
}

inline Report recon_suite(const Options& opt) {
    Report R;
    {
        auto& t = R["mean zero-coefficient probability is 1/2 below n0"];
        for (std::size_t n0 : opt.n0s) {
            if (n0 != 15) continue;
            for (const auto& c : sweep_codes(n0))
                for (std::size_t n = 2; n < n0; ++n) {
                    std::vector<BlockType> types;
                    for (std::size_t s = 0; s < n; ++s)
                        for (std::size_t j = 1; j <= n0 / std::gcd(n, n0); ++j) {
                            const BlockType b = block_decomposition(n0, n, s, 0, j);
                            const SubspaceSpec sp = to_spec(c, b, n);
                            if (std::none_of(types.begin(), types.end(),
                                             [&](const BlockType& o) { return same_spec(to_spec(c, o, n), sp); }))
                                types.push_back(b);
                        }
                    for (const auto& f : nontrivial_divisors(n))
                        for (const auto& b : types)
                            for (double p : {0.0, 0.05}) {
                                const double v = mean_zero_coeff_prob_exact(c, b, n, f, p, opt.guards);
                                t.check(std::abs(v - 0.5) <= 1e-12, detail::tag(c, to_spec(c, b, n), f) + " p=" + std::to_string(p) +
                                                                        " value=" + std::to_string(v));
                            }
                }
        }
    }
    {
        const CyclicCode c(7, parse_poly("1101"));
        const BlockType b = block_decomposition(7, 7, 1, 0, 1);
        auto& t = R["zero-coefficient table at n = n0 = 7, s = s0 + 1"];
        struct Row {
            const char* f;
            double p, want;
        };
        const Row rows[] = {{"11", 0, 0.5},        {"1101", 0, 0.8334},      {"1011", 0, 0.5},
                            {"1101", 0.01, 0.8076}, {"1101", 0.05, 0.7184}};
        for (const auto& r : rows) {
            const double v = mean_zero_coeff_prob_exact(c, b, 7, parse_poly(r.f), r.p);
            t.check(std::abs(v - r.want) <= 5e-4, std::string("f=") + r.f + " p=" + std::to_string(r.p) + " value=" + std::to_string(v));
        }
        auto& u = R["factor statistics differ at n = n0 (equal-probability assumption fails)"];
        for (double p : {0.0, 0.01, 0.05}) {
            const double a = mean_zero_coeff_prob_exact(c, b, 7, parse_poly("11"), p);
            const double d = mean_zero_coeff_prob_exact(c, b, 7, parse_poly("1101"), p);
            u.check(d - a > 0.2, "p=" + std::to_string(p));
        }
    }
    {
        auto& t = R["root divisibility over W(7) of the length-15 code"];
        const CyclicCode c(15, parse_poly_product("x4+x3+1,x4+x3+x2+x+1,x+1"));
        const double a = root_divisibility_prob_exact(c, Interior{0}, 7, parse_poly("11"), 0.0);
        const double b = root_divisibility_prob_exact(c, Interior{0}, 7, parse_poly("1101"), 0.0);
        t.check(a == 0.5, "f=1+X value=" + std::to_string(a));
        t.check(b == 0.125, "f=1+X+X^3 value=" + std::to_string(b));
        t.notes.push_back("enumeration pairs 0.5 with X+1 and 0.125 with the cubic, not the other way round");
    }
    return R;
}

inline std::vector<std::string> suite_names() { return {"algebra", "distributions", "noisy", "bounds", "recon", "all"}; }

inline Report run_suite(std::string_view name, const Options& opt) {
    Report R;
    if (name == "algebra") return algebra_suite(opt);
    if (name == "distributions") return theorem_sweep(opt, {true, false, false});
    if (name == "noisy") return theorem_sweep(opt, {false, true, false});
    if (name == "bounds") {
        R.merge(theorem_sweep(opt, {false, false, true}));
        R.merge(coset_suite(opt));
        return R;
    }
    if (name == "recon") return recon_suite(opt);
    if (name == "all") {
        R.merge(algebra_suite(opt));
        R.merge(theorem_sweep(opt, {true, true, true}));
        R.merge(coset_suite(opt));
        R.merge(recon_suite(opt));
        return R;
    }
    throw ParseError("unknown suite '" + std::string(name) + "'");
}

}  // namespace cyclicid::verify

#endif
