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

#ifndef CYCLICID_BLIND_RECON_HPP
#define CYCLICID_BLIND_RECON_HPP

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <cstdio>
#include <map>
#include <numbers>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "channel_sim.hpp"
#include "cyclic_code.hpp"
#include "parallel.hpp"
#include "poly_text.hpp"
#include "syndrome_dist.hpp"
#include "xn1.hpp"

namespace cyclicid {

// ---- statistics -----------------------------------------------------------------

inline double zero_syndrome_stat(const std::vector<Block>& blocks, const Poly2& f) {
    if (blocks.empty()) throw DomainError("no blocks");
    const ResidueMap rm(blocks.front().n, f);
    std::size_t z = 0;
    for (const auto& b : blocks) z += rm(b.bits) == 0;
    return static_cast<double>(z) / static_cast<double>(blocks.size());
}

inline double lambda_coeff(std::size_t n, std::size_t deg_f, double p) {
    require_probability(p);
    if (deg_f > n) throw DomainError("lambda needs deg f <= n");
    const double t = std::pow(1.0 - 2.0 * p, static_cast<double>(n - deg_f + 1));
    return (1.0 - t) / (1.0 + t);
}

// P[e in C(n,f)] for BSC(p) noise: the weight-distribution sum when the code is small
// enough to enumerate, otherwise the zero cell of the residue DP (the same event).
inline double p_zero_syndrome(std::size_t n, const Poly2& f, double p, const Guards& g = {}) {
    const CyclicCode c(n, f);
    if (c.k() <= 24 && n <= max_word_length) return p_zero_syndrome_code(c, p);
    return error_residue_distribution(n, f, p, g).mass[0];
}

inline double h1_upper_bound(const CyclicCode& cnf, double p) {
    const double lam = lambda_coeff(cnf.n(), cnf.n() - cnf.k(), p);
    return p_zero_syndrome_code(cnf, p) * (lam + 1.0) / 2.0;
}

inline double kl_lower_bound(double p0, double lambda) {
    const double a = (1.0 - lambda) / 2.0;
    return (2.0 / std::numbers::ln2) * a * a * p0 * p0;
}

enum class Decision { H0, H1 };

struct TestOutcome {
    std::size_t n = 0, s = 0;
    Poly2 f;
    std::size_t M = 0;
    double stat = 0, p0 = 0, bound = 0, tau = 0;
    Decision decision = Decision::H1;
    double kl_lb = 0;
};

// Thresholds from P(C(n,f)) directly; hypothesis_test below derives p0 itself.
inline TestOutcome decide(double stat, std::size_t M, std::size_t n, const Poly2& f, double p0, double p) {
    if (M < 1) throw DomainError("hypothesis test needs M >= 1");
    TestOutcome t;
    t.n = n;
    t.f = f;
    t.M = M;
    t.stat = stat;
    t.p0 = p0;
    const double lam = lambda_coeff(n, f.deg(), p);
    t.bound = p0 * (lam + 1.0) / 2.0;
    t.tau = (t.p0 + t.bound) / 2.0;
    t.decision = stat >= t.tau ? Decision::H0 : Decision::H1;
    t.kl_lb = kl_lower_bound(p0, lam);
    return t;
}

inline TestOutcome hypothesis_test(double stat, std::size_t M, const CyclicCode& cnf, double p) {
    return decide(stat, M, cnf.n(), cnf.g(), p_zero_syndrome_code(cnf, p), p);
}

// ---- exact per-block probabilities -------------------------------------------------

namespace detail {

// Fraction of span(basis) orthogonal to h, by walking every element.
inline double orthogonal_fraction(const std::vector<std::uint64_t>& basis, std::uint64_t h) {
    std::uint64_t w = 0, zeros = 1;
    const std::uint64_t total = std::uint64_t{1} << basis.size();
    for (std::uint64_t i = 1; i < total; ++i) {
        w ^= basis[static_cast<std::size_t>(std::countr_zero(i))];
        zeros += word::parity(w & h) == 0;
    }
    return static_cast<double>(zeros) / static_cast<double>(total);
}

inline double flip_parity_prob(std::size_t weight, double p) {
    return (1.0 - std::pow(1.0 - 2.0 * p, static_cast<double>(weight))) / 2.0;
}

}  // namespace detail

// Average over the parity-check rows h_l = X^l f_perp of P[(w + e) . h_l = 0].
inline double mean_zero_coeff_prob_exact(const CyclicCode& code, const BlockType& bt, std::size_t n, const Poly2& f,
                                         double p, const Guards& g = {}) {
    require_probability(p);
    const Subspace sub = build_subspace(to_spec(code, bt, n), g);
    const auto rows = parity_check_rows(n, f);
    double acc = 0.0;
    for (auto h : rows) {
        const double z = detail::orthogonal_fraction(sub.basis, h);
        const double q = detail::flip_parity_prob(static_cast<std::size_t>(std::popcount(h)), p);
        acc += z * (1.0 - q) + (1.0 - z) * q;
    }
    return acc / static_cast<double>(rows.size());
}

inline double root_divisibility_prob_exact(const CyclicCode& code, const BlockType& bt, std::size_t n, const Poly2& f,
                                           double p, const Guards& g = {}) {
    if (f.is_zero() || f.deg() == 0 || !is_irreducible(f)) throw DomainError("root statistic needs an irreducible f");
    return noisy_distribution(to_spec(code, bt, n), f, p, g).mass[0];
}

struct EmpiricalStats {
    double zero_syndrome_frac = 0;
    double mean_zero_coeff_frac = 0;
    double divisibility_frac = 0;
};

inline EmpiricalStats empirical_stats(const std::vector<Block>& blocks, const Poly2& f) {
    if (blocks.empty()) throw DomainError("no blocks");
    const std::size_t n = blocks.front().n;
    const ResidueMap rm(n, f);
    const auto rows = parity_check_rows(n, f);
    std::size_t zero = 0, coeff_zero = 0;
    for (const auto& b : blocks) {
        zero += rm(b.bits) == 0;
        for (auto h : rows) coeff_zero += word::parity(b.bits & h) == 0;
    }
    const double M = static_cast<double>(blocks.size());
    EmpiricalStats e;
    e.zero_syndrome_frac = static_cast<double>(zero) / M;
    e.mean_zero_coeff_frac = static_cast<double>(coeff_zero) / (M * static_cast<double>(rows.size()));
    // f | y(X) exactly when the residue vanishes.
    e.divisibility_frac = e.zero_syndrome_frac;
    return e;
}

// ---- search ----------------------------------------------------------------------

enum class Method { ZeroSyndrome, FactorEntropy, RootEntropy };

inline std::string_view method_name(Method m) {
    switch (m) {
        case Method::ZeroSyndrome: return "zero-syndrome";
        case Method::FactorEntropy: return "factor-entropy";
        case Method::RootEntropy: return "root-entropy";
    }
    return "?";
}

inline Method parse_method(std::string_view s) {
    if (s == "zero-syndrome") return Method::ZeroSyndrome;
    if (s == "factor-entropy") return Method::FactorEntropy;
    if (s == "root-entropy") return Method::RootEntropy;
    throw ParseError("unknown method '" + std::string(s) + "'");
}

struct Winner {
    std::size_t n = 0, s = 0;
    Poly2 g;
    double score = 0;
};

struct ReconReport {
    Method method = Method::ZeroSyndrome;
    double p = 0;
    std::size_t n_min = 0, n_max = 0, length = 0;
    // Zero-syndrome: full test records. Other methods: n, s, f, M and stat only.
    std::vector<TestOutcome> outcomes;
    std::optional<Winner> winner;
    std::vector<std::string> diagnostics;
};

namespace detail {

struct CellResult {
    std::vector<TestOutcome> outcomes;
    double score = 0;
    Poly2 g = Poly2::from_word(1);
    bool any = false;
};

inline std::string fmt(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6f", x);
    return buf;
}

}  // namespace detail

inline ReconReport reconstruct(const BitSeq& bits, std::size_t n_min, std::size_t n_max, double p,
                               Method method = Method::ZeroSyndrome, std::size_t jobs = 1) {
    if (n_min < 2 || n_max < n_min || n_max > max_word_length) throw DomainError("need 2 <= n_min <= n_max <= 64");
    require_probability(p);
    ReconReport rep;
    rep.method = method;
    rep.p = p;
    rep.n_min = n_min;
    rep.n_max = n_max;
    rep.length = bits.size();

    // Candidate factors and their null probabilities, per n.
    std::map<std::size_t, std::vector<Poly2>> factors;
    std::map<std::pair<std::size_t, Poly2>, double> p0;
    for (std::size_t n = n_min; n <= n_max; ++n) {
        factors[n];
        for (const auto& [f, e] : factor_xn1(n).entries) {
            if (f.deg() >= n) continue;
            if (method == Method::ZeroSyndrome) {
                try {
                    p0[{n, f}] = p_zero_syndrome(n, f, p);
                } catch (const ResourceError& err) {
                    rep.diagnostics.push_back("skipped n=" + std::to_string(n) + " f=" + to_bits(f) + ": " + err.what());
                    continue;
                }
            }
            factors[n].push_back(f);
        }
    }
    if (bits.size() < n_max || (bits.size() - (n_max - 1)) / n_max < 50)
        rep.diagnostics.push_back("warning: fewer than 50 blocks at n=" + std::to_string(n_max));

    std::vector<std::pair<std::size_t, std::size_t>> cells;
    for (std::size_t n = n_min; n <= n_max; ++n)
        for (std::size_t s = 0; s < n; ++s) cells.emplace_back(n, s);
    std::vector<detail::CellResult> res(cells.size());

    parallel_for(cells.size(), jobs, [&](std::size_t i) {
        const auto [n, s] = cells[i];
        const auto blocks = segment(bits, n, s);
        if (blocks.empty()) return;
        auto& cell = res[i];
        double lo = 1.0, hi = 0.0;
        Poly2 best_f;
        double best = -1.0;
        for (const Poly2& f : factors.at(n)) {
            TestOutcome t;
            if (method == Method::ZeroSyndrome) {
                t = decide(zero_syndrome_stat(blocks, f), blocks.size(), n, f, p0.at({n, f}), p);
                if (t.decision == Decision::H0) {
                    cell.any = true;
                    cell.score += static_cast<double>(t.M) * t.kl_lb;
                    cell.g = cell.g * f;
                }
            } else {
                const auto e = empirical_stats(blocks, f);
                t.n = n;
                t.f = f;
                t.M = blocks.size();
                t.stat = method == Method::FactorEntropy ? e.mean_zero_coeff_frac : e.divisibility_frac;
                const double key = method == Method::FactorEntropy ? std::abs(t.stat - 0.5) : t.stat;
                if (key > best) best = key, best_f = f;
                lo = std::min(lo, t.stat);
                hi = std::max(hi, t.stat);
            }
            t.s = s;
            cell.outcomes.push_back(t);
        }
        if (method != Method::ZeroSyndrome && !cell.outcomes.empty()) {
            cell.any = true;
            cell.score = method == Method::FactorEntropy ? best : hi - lo;
            cell.g = best_f;
        }
    });

    std::set<std::size_t> accepting_n;
    for (std::size_t i = 0; i < cells.size(); ++i) {
        auto& cell = res[i];
        rep.outcomes.insert(rep.outcomes.end(), cell.outcomes.begin(), cell.outcomes.end());
        if (!cell.any) continue;
        accepting_n.insert(cells[i].first);
        // Cells are visited in (n, s) order, so a strict comparison keeps the smaller n, then s.
        if (!rep.winner || cell.score > rep.winner->score)
            rep.winner = Winner{cells[i].first, cells[i].second, cell.g, cell.score};
    }
    if (method == Method::ZeroSyndrome && accepting_n.size() > 1) {
        std::string list;
        for (auto n : accepting_n) list += (list.empty() ? "" : ",") + std::to_string(n);
        rep.diagnostics.push_back("H0 accepted at several block lengths: " + list);
    }
    return rep;
}

inline std::string format_outcome(const TestOutcome& t, Method m) {
    std::string s = "n=" + std::to_string(t.n) + " s=" + std::to_string(t.s) + " f=" + to_bits(t.f) +
                    " M=" + std::to_string(t.M) + " stat=" + detail::fmt(t.stat);
    if (m != Method::ZeroSyndrome) return s;
    return s + " p0=" + detail::fmt(t.p0) + " bound=" + detail::fmt(t.bound) + " tau=" + detail::fmt(t.tau) +
           " decision=" + (t.decision == Decision::H0 ? "H0" : "H1") + " kl_lb=" + detail::fmt(t.kl_lb);
}

inline std::string format_report(const ReconReport& r) {
    std::string out = "method=" + std::string(method_name(r.method)) + " p=" + detail::fmt(r.p) +
                      " n_min=" + std::to_string(r.n_min) + " n_max=" + std::to_string(r.n_max) +
                      " N=" + std::to_string(r.length) + "\n";
    for (const auto& t : r.outcomes) out += format_outcome(t, r.method) + "\n";
    for (const auto& d : r.diagnostics) out += "# " + d + "\n";
    out += "== winner ==\n";
    if (r.winner)
        out += "n=" + std::to_string(r.winner->n) + " s=" + std::to_string(r.winner->s) + " g=" + to_bits(r.winner->g) +
               " score=" + detail::fmt(r.winner->score) + "\n";
    else
        out += "no code detected\n";
    return out;
}

}  // namespace cyclicid

#endif
