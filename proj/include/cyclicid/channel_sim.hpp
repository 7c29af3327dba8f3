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

#ifndef CYCLICID_CHANNEL_SIM_HPP
#define CYCLICID_CHANNEL_SIM_HPP

#include <cstddef>
#include <cstdint>
#include <fstream>
#include <iterator>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "cyclic_code.hpp"
#include "lrs.hpp"

namespace cyclicid {

struct StreamConfig {
    CyclicCode code;
    std::size_t s0 = 0;
    double p = 0.0;
    std::size_t blocks = 0;
    std::uint64_t seed = 0;
};

inline void validate(const StreamConfig& cfg) {
    const auto& c = cfg.code;
    if (c.n() > max_word_length) throw ResourceError("code length exceeds 64");
    if (c.trivial()) throw DomainError("the transmitted code must be nontrivial");
    if (is_degenerate_code(c)) throw DomainError("the transmitted code must be non-degenerate");
    if (cfg.s0 >= c.n()) throw DomainError("s0 must lie in [0, n0)");
    if (!(cfg.p >= 0.0 && cfg.p < 0.5)) throw DomainError("p must lie in [0, 1/2)");
}

namespace detail {

inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

// Uniform double in [0, 1) from the top 53 bits, identical on every platform.
inline double unit(std::mt19937_64& g) { return static_cast<double>(g() >> 11) * 0x1.0p-53; }

}  // namespace detail

// Independent streams per seed: stream 1 draws messages, stream 2 draws bit flips,
// so the codewords of a run do not depend on p.
struct ChannelRng {
    std::mt19937_64 messages, noise;
    explicit ChannelRng(std::uint64_t seed)
        : messages(detail::splitmix64(seed ^ 0x6d657373616765ULL)), noise(detail::splitmix64(seed ^ 0x6e6f697365ULL)) {}
};

// The head is the tail of one extra noisy codeword, so the first full codeword starts at s0.
inline BitSeq generate_stream(const StreamConfig& cfg) {
    validate(cfg);
    const std::size_t n0 = cfg.code.n(), k = cfg.code.k();
    const std::uint64_t g = cfg.code.g().word();
    ChannelRng rng(cfg.seed);
    auto noisy_codeword = [&] {
        const std::uint64_t v = word::clmul(rng.messages() & word::mask(k), g);
        BitSeq out(n0);
        for (std::size_t i = 0; i < n0; ++i) {
            std::uint8_t b = static_cast<std::uint8_t>((v >> i) & 1);
            if (detail::unit(rng.noise) < cfg.p) b ^= 1;
            out[i] = b;
        }
        return out;
    };
    BitSeq bits;
    bits.reserve(cfg.s0 + cfg.blocks * n0);
    const BitSeq pad = noisy_codeword();
    bits.insert(bits.end(), pad.end() - static_cast<std::ptrdiff_t>(cfg.s0), pad.end());
    for (std::size_t j = 0; j < cfg.blocks; ++j) {
        const BitSeq c = noisy_codeword();
        bits.insert(bits.end(), c.begin(), c.end());
    }
    return bits;
}

struct Block {
    std::uint64_t bits;  // coordinate i in bit i
    std::size_t n;
    std::size_t index;  // j, starting at 1
};

inline std::vector<Block> segment(const BitSeq& bits, std::size_t n, std::size_t s) {
    if (n == 0 || n > max_word_length) throw DomainError("block length must lie in [1, 64]");
    if (s >= n) throw DomainError("offset s must be smaller than n");
    std::vector<Block> out;
    if (bits.size() < s + n) return out;
    const std::size_t M = (bits.size() - s) / n;
    out.reserve(M);
    for (std::size_t j = 0; j < M; ++j) {
        std::uint64_t w = 0;
        const std::size_t base = s + j * n;
        for (std::size_t i = 0; i < n; ++i) w |= static_cast<std::uint64_t>(bits[base + i] & 1) << i;
        out.push_back({w, n, j + 1});
    }
    return out;
}

// ---- stream files: one line of '0'/'1', optional trailing newline ----

inline BitSeq parse_stream(std::string_view text) {
    if (!text.empty() && text.back() == '\n') text.remove_suffix(1);
    if (!text.empty() && text.back() == '\r') text.remove_suffix(1);
    BitSeq bits;
    bits.reserve(text.size());
    for (std::size_t i = 0; i < text.size(); ++i) {
        const char ch = text[i];
        if (ch != '0' && ch != '1')
            throw CorruptInput("stream character " + std::to_string(i) + " is not '0' or '1'");
        bits.push_back(static_cast<std::uint8_t>(ch - '0'));
    }
    return bits;
}

inline BitSeq read_stream(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw CorruptInput("cannot open stream file " + path);
    const std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    return parse_stream(text);
}

inline std::string format_stream(const BitSeq& bits) {
    std::string s;
    s.reserve(bits.size() + 1);
    for (auto b : bits) s.push_back(b ? '1' : '0');
    s.push_back('\n');
    return s;
}

inline void write_stream(const std::string& path, const BitSeq& bits) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw DomainError("cannot write " + path);
    out << format_stream(bits);
    if (!out) throw DomainError("write failed for " + path);
}

}  // namespace cyclicid

#endif
