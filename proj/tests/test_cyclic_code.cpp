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

#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <random>
#include <set>
#include <string>

#include "cyclicid/cyclicid.hpp"

using namespace cyclicid;

namespace {

// Remainder of v(X) mod f by schoolbook division on bits.
std::uint64_t long_rem(std::uint64_t v, std::uint64_t f) {
    const int d = 63 - std::countl_zero(f);
    for (int i = 63; i >= d; --i)
        if ((v >> i) & 1) v ^= f << (i - d);
    return v;
}

std::set<std::uint64_t> brute_code(std::size_t n, std::uint64_t g) {
    std::set<std::uint64_t> s;
    for (std::uint64_t v = 0; v < (std::uint64_t{1} << n); ++v)
        if (long_rem(v, g) == 0) s.insert(v);
    return s;
}

int dot(std::uint64_t a, std::uint64_t b) { return std::popcount(a & b) & 1; }

}  // namespace

TEST_CASE("construction validates the generator", "[code]") {
    CHECK_THROWS_AS(CyclicCode(7, parse_poly("x2+1")), InvalidGenerator);
    CHECK_THROWS_AS(CyclicCode(7, Poly2{}), InvalidGenerator);
    CHECK_THROWS_AS(CyclicCode(0, parse_poly("1")), InvalidGenerator);
    const CyclicCode c(7, parse_poly("x3+x+1"));
    CHECK(c.k() == 4);
    CHECK(c.n() == 7);
    CHECK_FALSE(c.trivial());
    CHECK(CyclicCode(7, parse_poly("1")).trivial());
    CHECK(CyclicCode(7, Poly2::xn1(7)).trivial());
}

TEST_CASE("codewords are exactly the multiples of g", "[code]") {
    for (std::size_t n : {5u, 6u, 7u, 9u, 12u, 15u}) {
        for (const auto& g : divisors_xn1(n)) {
            const CyclicCode c(n, g);
            const auto brute = brute_code(n, g.word());
            std::set<std::uint64_t> got;
            for (auto w : codewords(c)) got.insert(w);
            CHECK(got == brute);
            // Closed under the cyclic shift.
            for (auto w : got) CHECK(got.count(((w << 1) | (w >> (n - 1))) & word::mask(n)));
        }
    }
}

TEST_CASE("dual generator spans the orthogonal complement", "[code]") {
    for (std::size_t n : {6u, 7u, 9u, 15u}) {
        for (const auto& g : divisors_xn1(n)) {
            const CyclicCode c(n, g);
            const auto code = brute_code(n, g.word());
            std::set<std::uint64_t> perp;
            for (std::uint64_t v = 0; v < (std::uint64_t{1} << n); ++v) {
                bool ok = true;
                for (auto w : code)
                    if (dot(v, w)) {
                        ok = false;
                        break;
                    }
                if (ok) perp.insert(v);
            }
            INFO("n=" << n << " g=" << to_bits(g));
            CHECK(brute_code(n, c.g_dual().word()) == perp);
            CHECK(dual_generator(c) == c.g_dual());
        }
    }
}

TEST_CASE("weight distribution of known codes", "[code]") {
    const auto ham = weight_distribution(CyclicCode(7, parse_poly("x3+x+1")));
    CHECK(ham.A == std::vector<std::uint64_t>{1, 0, 0, 7, 7, 0, 0, 1});
    const auto simplex = weight_distribution(CyclicCode(7, parse_poly_product("x+1,x3+x+1")));
    CHECK(simplex.A == std::vector<std::uint64_t>{1, 0, 0, 0, 7, 0, 0, 0});
    for (std::size_t n : {9u, 15u})
        for (const auto& g : divisors_xn1(n)) {
            const CyclicCode c(n, g);
            std::vector<std::uint64_t> A(n + 1, 0);
            for (auto w : brute_code(n, g.word())) ++A[static_cast<std::size_t>(std::popcount(w))];
            CHECK(weight_distribution(c).A == A);
        }
    CHECK_THROWS_AS(weight_distribution(CyclicCode(31, parse_poly("x5+x2+1")), 24), ResourceError);
}

TEST_CASE("P(C) equals the brute-force error sum", "[code]") {
    for (double p : {0.0, 0.01, 0.1, 0.5}) {
        for (const auto& g : divisors_xn1(9)) {
            const CyclicCode c(9, g);
            double brute = 0;
            for (auto e : brute_code(9, g.word())) {
                const int w = std::popcount(e);
                brute += std::pow(p, w) * std::pow(1 - p, 9 - w);
            }
            CHECK(p_zero_syndrome_code(c, p) == Catch::Approx(brute).margin(1e-15));
        }
    }
    CHECK_THROWS_AS(p_zero_syndrome_code(CyclicCode(7, parse_poly("x3+x+1")), 0.6), DomainError);
    CHECK_THROWS_AS(p_zero_syndrome_code(CyclicCode(7, parse_poly("x3+x+1")), -0.1), DomainError);
}

TEST_CASE("degenerate codes are repetitions of a shorter code", "[code]") {
    for (std::size_t n : {6u, 9u, 12u, 15u}) {
        for (const auto& g : divisors_xn1(n)) {
            const CyclicCode c(n, g);
            if (c.trivial()) {
                CHECK_THROWS_AS(is_degenerate_code(c), NotApplicable);
                continue;
            }
            // Oracle: some proper period d | n is shared by every codeword.
            const auto code = brute_code(n, g.word());
            bool repeated = false;
            for (std::size_t d = 1; d < n && !repeated; ++d) {
                if (n % d) continue;
                repeated = std::all_of(code.begin(), code.end(), [&](std::uint64_t w) {
                    for (std::size_t i = d; i < n; ++i)
                        if (((w >> i) & 1) != ((w >> (i - d)) & 1)) return false;
                    return true;
                });
            }
            INFO("n=" << n << " g=" << to_bits(g));
            CHECK(is_degenerate_code(c) == repeated);
        }
    }
}

TEST_CASE("residue map and syndrome basis agree with long division", "[code]") {
    for (std::size_t n : {7u, 12u, 15u, 21u}) {
        for (const auto& f : divisors_xn1(n)) {
            if (f.deg() == 0 || f.deg() == n) continue;
            const ResidueMap rm(n, f);
            const auto h = syndrome_basis(n, f);
            std::mt19937_64 g(n);
            for (int it = 0; it < 200; ++it) {
                const std::uint64_t v = g() & word::mask(n);
                const std::uint64_t r = long_rem(v, f.word());
                CHECK(rm(v) == r);
                for (std::size_t l = 0; l < h.size(); ++l) CHECK(static_cast<std::uint64_t>(dot(v, h[l])) == ((r >> l) & 1));
            }
        }
    }
    CHECK_THROWS_AS(syndrome_basis(7, parse_poly("x2+1")), DomainError);
    CHECK_THROWS_AS(syndrome_basis(7, Poly2::xn1(7)), NotApplicable);
}

TEST_CASE("parity-check rows annihilate C(n, f) and have full rank", "[code]") {
    for (std::size_t n : {7u, 9u, 15u}) {
        for (const auto& f : divisors_xn1(n)) {
            if (f.deg() == 0 || f.deg() == n) continue;
            const auto rows = parity_check_rows(n, f);
            CHECK(rows.size() == f.deg());
            CHECK(rank_of(rows) == f.deg());
            for (auto w : brute_code(n, f.word()))
                for (auto h : rows) CHECK(dot(w, h) == 0);
        }
    }
}

TEST_CASE("generator rows span the code", "[code]") {
    const CyclicCode c(15, parse_poly_product("x4+x3+1,x4+x3+x2+x+1,x+1"));
    const auto rows = generator_rows(c);
    CHECK(rows.size() == 6);
    CHECK(rank_of(rows) == 6);
    for (auto r : rows) CHECK(long_rem(r, c.g().word()) == 0);
}

TEST_CASE("small worked codes", "[cyclic_code]") {
    const auto P = [](const char* s) { return parse_poly(s); };
    CHECK(make_code(7, P("x3+x+1")).k() == 4);
    const auto g0 = P("x4+x3+1") * P("x4+x3+x2+x+1") * P("x+1");
    const auto c15 = make_code(15, g0);
    CHECK(c15.k() == 6);
    const auto t = make_code(7, P("1"));
    CHECK(t.k() == 7);
    CHECK(t.trivial());
    CHECK(dual_generator(c15) == P("x2+x+1") * P("x4+x3+1"));
    CHECK(dual_generator(make_code(7, P("x3+x2+1"))) == P("x+1") * P("x3+x2+1"));

    const auto c4 = make_code(4, P("x2+1"));
    CHECK(is_degenerate_code(c4));
    CHECK_FALSE(is_degenerate_code(make_code(7, P("x3+x+1"))));
    CHECK_FALSE(is_degenerate_code(c15));
    std::set<std::string> words;
    for (auto w : codewords(c4)) words.insert(to_bits(w, 4));
    CHECK(words == std::set<std::string>{"0000", "1010", "0101", "1111"});

    const auto ham = make_code(7, P("x3+x+1"));
    CHECK(weight_distribution(ham).A == std::vector<std::uint64_t>{1, 0, 0, 7, 7, 0, 0, 1});
    // direct sum over the weight profile written out by hand
    const double p = 0.01, q = 1 - p;
    const double want = std::pow(q, 7) + 7 * std::pow(p, 3) * std::pow(q, 4) + 7 * std::pow(p, 4) * std::pow(q, 3) + std::pow(p, 7);
    CHECK(std::abs(p_zero_syndrome_code(ham, p) - want) < 1e-15);
    CHECK(std::abs(p_zero_syndrome_code(ham, p) - 0.93207) < 1e-5);
    for (const auto& c : {ham, c15, c4}) {
        CHECK(p_zero_syndrome_code(c, 0.0) == 1.0);
        CHECK(p_zero_syndrome_code(c, 0.5) == Catch::Approx(std::ldexp(1.0, int(c.k()) - int(c.n()))).epsilon(1e-12));
    }

    const auto h = syndrome_basis(7, P("x3+x2+1"));
    REQUIRE(h.size() == 3);
    CHECK(to_bits(h[0], 7) == "1001110");
    CHECK(to_bits(h[1], 7) == "0100111");
    CHECK(to_bits(h[2], 7) == "0011101");
    const auto h3 = syndrome_basis(3, P("x+1"));
    REQUIRE(h3.size() == 1);
    CHECK(to_bits(h3[0], 3) == "111");
}
