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

#ifndef CYCLICID_LINALG_HPP
#define CYCLICID_LINALG_HPP

#include <array>
#include <cstddef>
#include <cstdint>
#include <vector>

#include "poly2.hpp"

namespace cyclicid {

// Row echelon basis of a subspace of GF(2)^64, each row pivoting on its top bit.
class Echelon {
   public:
    // False if v was already in the span.
    bool insert(std::uint64_t v) {
        v = reduce(v);
        if (!v) return false;
        const auto t = static_cast<std::size_t>(word::top(v));
        piv_[t] = v;
        mask_ |= std::uint64_t{1} << t;
        ++rank_;
        return true;
    }

    std::uint64_t reduce(std::uint64_t v) const {
        for (std::uint64_t x; (x = v & mask_);) v ^= piv_[static_cast<std::size_t>(word::top(x))];
        return v;
    }

    bool contains(std::uint64_t v) const { return reduce(v) == 0; }

    std::size_t rank() const { return rank_; }

    std::vector<std::uint64_t> rows() const {
        std::vector<std::uint64_t> r;
        for (auto x : piv_)
            if (x) r.push_back(x);
        return r;
    }

    // Reduced row echelon form; equal subspaces give equal vectors.
    std::vector<std::uint64_t> canonical() const {
        std::vector<std::uint64_t> r;
        for (auto x : piv_)
            if (x) {
                const std::uint64_t lead = std::uint64_t{1} << word::top(x);
                r.push_back(lead | reduce(x ^ lead));
            }
        return r;
    }

   private:
    std::array<std::uint64_t, 64> piv_{};
    std::uint64_t mask_ = 0;
    std::size_t rank_ = 0;
};

inline std::size_t rank_of(const std::vector<std::uint64_t>& vs) {
    Echelon e;
    for (auto v : vs) e.insert(v);
    return e.rank();
}

}  // namespace cyclicid

#endif
