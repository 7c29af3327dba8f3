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
#include <cstdio>
#include <filesystem>

#include "cyclicid/cyclicid.hpp"

using namespace cyclicid;

namespace {

std::uint64_t long_rem(std::uint64_t v, std::uint64_t f) {
    const int d = 63 - std::countl_zero(f);
    for (int i = 63; i >= d; --i)
        if ((v >> i) & 1) v ^= f << (i - d);
    return v;
}

StreamConfig hamming(std::size_t s0, double p, std::size_t blocks, std::uint64_t seed) {
    return {CyclicCode(7, parse_poly("x3+x+1")), s0, p, blocks, seed};
}

}  // namespace

TEST_CASE("noise-free stream is a run of codewords after the head", "[channel]") {
    for (std::size_t s0 = 0; s0 < 7; ++s0) {
        const auto bits = generate_stream(hamming(s0, 0.0, 300, 17 + s0));
        REQUIRE(bits.size() == s0 + 300 * 7);
        for (const auto& b : segment(bits, 7, s0)) CHECK(long_rem(b.bits, 0b1011) == 0);
        // The head is a codeword tail: some codeword ends with those s0 bits.
        bool found = false;
        for (std::uint64_t u = 0; u < 16 && !found; ++u) {
            const std::uint64_t cw = word::clmul(u, 0b1011);
            bool ok = true;
            for (std::size_t i = 0; i < s0; ++i) ok &= ((cw >> (7 - s0 + i)) & 1) == bits[i];
            found = ok;
        }
        CHECK(found);
    }
}

TEST_CASE("same seed, same stream; the message draws ignore p", "[channel]") {
    CHECK(generate_stream(hamming(2, 0.1, 100, 5)) == generate_stream(hamming(2, 0.1, 100, 5)));
    CHECK(generate_stream(hamming(2, 0.1, 100, 5)) != generate_stream(hamming(2, 0.1, 100, 6)));
    const auto clean = generate_stream(hamming(2, 0.0, 100, 5));
    const auto noisy = generate_stream(hamming(2, 0.2, 100, 5));
    REQUIRE(clean.size() == noisy.size());
    std::size_t flips = 0;
    for (std::size_t i = 0; i < clean.size(); ++i) flips += clean[i] != noisy[i];
    CHECK(flips > 0);
}

TEST_CASE("flip rate matches p", "[channel]") {
    for (double p : {0.02, 0.1, 0.3}) {
        const auto clean = generate_stream(hamming(0, 0.0, 20000, 99));
        const auto noisy = generate_stream(hamming(0, p, 20000, 99));
        double flips = 0;
        for (std::size_t i = 0; i < clean.size(); ++i) flips += clean[i] != noisy[i];
        const double N = static_cast<double>(clean.size());
        const double sigma = std::sqrt(N * p * (1 - p));
        CHECK(std::abs(flips - N * p) < 5 * sigma);
    }
}

TEST_CASE("messages are uniform over the code", "[channel]") {
    const auto bits = generate_stream(hamming(0, 0.0, 16000, 3));
    std::vector<int> seen(128, 0);
    for (const auto& b : segment(bits, 7, 0)) ++seen[b.bits];
    int distinct = 0;
    for (int c : seen)
        if (c) {
            ++distinct;
            CHECK(std::abs(c - 1000) < 5 * std::sqrt(1000.0));
        }
    CHECK(distinct == 16);
}

TEST_CASE("configuration is validated", "[channel]") {
    CHECK_THROWS_AS(generate_stream(hamming(7, 0.0, 10, 1)), DomainError);
    CHECK_THROWS_AS(generate_stream(hamming(0, 0.5, 10, 1)), DomainError);
    CHECK_THROWS_AS(generate_stream(hamming(0, -0.1, 10, 1)), DomainError);
    CHECK_THROWS_AS(generate_stream({CyclicCode(7, parse_poly("1")), 0, 0.0, 10, 1}), DomainError);
    // (1+X^3) generates a code whose words repeat with period 3.
    CHECK_THROWS_AS(generate_stream({CyclicCode(6, parse_poly("x3+1")), 0, 0.0, 10, 1}), DomainError);
}

TEST_CASE("segmentation", "[channel]") {
    BitSeq bits{1, 0, 1, 1, 0, 0, 1, 0, 1, 1};
    const auto bl = segment(bits, 3, 1);
    REQUIRE(bl.size() == 3);
    CHECK(bl[0].bits == 0b110);  // bits 1..3 = 0,1,1
    CHECK(bl[0].index == 1);
    CHECK(bl[1].bits == 0b100);  // bits 4..6 = 0,0,1
    CHECK(bl[2].bits == 0b110);
    CHECK(segment(bits, 11, 0).empty());
    CHECK_THROWS_AS(segment(bits, 3, 3), DomainError);
    CHECK_THROWS_AS(segment(bits, 0, 0), DomainError);
    CHECK_THROWS_AS(segment(bits, 65, 0), DomainError);
}

TEST_CASE("stream text round trip", "[channel]") {
    const auto bits = generate_stream(hamming(3, 0.05, 50, 8));
    CHECK(parse_stream(format_stream(bits)) == bits);
    CHECK(parse_stream("0101\r\n") == BitSeq{0, 1, 0, 1});
    CHECK(parse_stream("").empty());
    CHECK_THROWS_AS(parse_stream("01x1"), CorruptInput);
    CHECK_THROWS_AS(parse_stream("01\n01"), CorruptInput);
    const auto path = (std::filesystem::temp_directory_path() / "cyclicid_stream_test.txt").string();
    write_stream(path, bits);
    CHECK(read_stream(path) == bits);
    std::remove(path.c_str());
    CHECK_THROWS_AS(read_stream("/nonexistent/dir/file"), CorruptInput);
}

TEST_CASE("listed stream values", "[channel]") {
    // A million bits at p = 0.1 land within 0.002 of the rate.
    const auto clean = generate_stream(hamming(0, 0.0, 142858, 2024));
    const auto noisy = generate_stream(hamming(0, 0.1, 142858, 2024));
    REQUIRE(clean.size() >= 1000000);
    double flips = 0;
    for (std::size_t i = 0; i < clean.size(); ++i) flips += clean[i] != noisy[i];
    CHECK(std::abs(flips / static_cast<double>(clean.size()) - 0.1) < 0.002);

    // x^2+1 over length 4 only produces repeated words, so it is not a valid transmitter.
    CHECK_THROWS_AS(generate_stream({CyclicCode(4, parse_poly("x2+1")), 0, 0.0, 1, 1}), DomainError);

    const BitSeq twenty(20, 1);
    CHECK(segment(twenty, 7, 1).size() == 2);
    CHECK(segment(BitSeq(9, 0), 7, 3).empty());
    const auto bits = generate_stream(hamming(4, 0.2, 40, 11));
    for (std::size_t n : {3, 7, 10}) {
        const std::size_t s = 2;
        const auto bl = segment(bits, n, s);
        CHECK(bl.size() == (bits.size() - s) / n);
        BitSeq joined;
        for (const auto& b : bl)
            for (std::size_t i = 0; i < n; ++i) joined.push_back((b.bits >> i) & 1);
        CHECK(joined == BitSeq(bits.begin() + s, bits.begin() + static_cast<std::ptrdiff_t>(s + bl.size() * n)));
    }
}
