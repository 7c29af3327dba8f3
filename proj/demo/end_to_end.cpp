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

// Transmit the (7,4) Hamming code over BSC(0.02) and recover (n, s, g) blindly.

#include <cstdio>
#include <cstdlib>

#include "cyclicid/cyclicid.hpp"

int main(int argc, char** argv) {
    using namespace cyclicid;
    const std::uint64_t seed = argc > 1 ? std::strtoull(argv[1], nullptr, 10) : 7;
    const StreamConfig cfg{CyclicCode(7, parse_poly("x3+x+1")), 3, 0.02, 2000, seed};
    const BitSeq bits = generate_stream(cfg);

    const auto rep = reconstruct(bits, 3, 10, cfg.p);
    std::printf("stream: %zu bits, true (n0, s0, g0) = (7, %zu, %s)\n", bits.size(), cfg.s0, to_bits(cfg.code.g()).c_str());
    if (!rep.winner) {
        std::printf("no code detected\n");
        return 2;
    }
    std::printf("recovered: n=%zu s=%zu g=%s score=%.1f\n", rep.winner->n, rep.winner->s, to_bits(rep.winner->g).c_str(),
                rep.winner->score);
    for (const auto& d : rep.diagnostics) std::printf("  %s\n", d.c_str());
}
