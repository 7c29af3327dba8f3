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

// Syndrome distribution of 9-bit windows of a length-15 code, taken mod 1+X^3+X^6.
// The windows never produce a uniform syndrome: only 16 of the 64 residues occur.

#include <cstdio>

#include "cyclicid/cyclicid.hpp"

int main() {
    using namespace cyclicid;
    const CyclicCode code(15, parse_poly_product("x4+x3+1,x4+x3+x2+x+1,x+1"));
    const Poly2 f = parse_poly("x6+x3+1");
    const SubspaceSpec w = Truncation{code, 9};

    const auto d = exact_distribution(w, f);
    std::printf("k0 = %zu, dim W(9) = %zu, |support| = %zu\n", code.k(), d.log2_den, d.support().size());
    std::printf("P[r = 0] = %g\n", d.mass[0]);
    std::printf("classify: %s, predict: %s\n", class_name(d.cls).data(), class_name(predict_class(w, f)).data());
    std::printf("restricted by the period-3 dual factor: %s\n", theorem1_restricted_uniform_test(code, 9, f) ? "yes" : "no");

    for (double p : {0.01, 0.05}) {
        const auto nd = noisy_distribution(w, f, p);
        std::printf("p = %.2f: P[r = 0] = %.6f (%s)\n", p, nd.mass[0], class_name(nd.cls).data());
    }
}
