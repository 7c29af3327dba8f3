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

#ifndef CYCLICID_PARALLEL_HPP
#define CYCLICID_PARALLEL_HPP

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace cyclicid {

inline std::size_t resolve_jobs(std::size_t jobs) {
    if (jobs) return jobs;
    return std::max<std::size_t>(1, std::thread::hardware_concurrency());
}

// Calls fn(i) for i < count on up to `jobs` threads (0 = all cores). Items are
// claimed dynamically; callers write results into per-index slots.
template <class F>
void parallel_for(std::size_t count, std::size_t jobs, F&& fn) {
    jobs = std::min(resolve_jobs(jobs), count);
    if (jobs <= 1) {
        for (std::size_t i = 0; i < count; ++i) fn(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr first;
    std::mutex mu;
    {
        std::vector<std::jthread> pool;
        for (std::size_t t = 0; t < jobs; ++t)
            pool.emplace_back([&] {
                for (;;) {
                    const std::size_t i = next.fetch_add(1);
                    if (i >= count) return;
                    try {
                        fn(i);
                    } catch (...) {
                        std::lock_guard lk(mu);
                        if (!first) first = std::current_exception();
                        next.store(count);
                    }
                }
            });
    }
    if (first) std::rethrow_exception(first);
}

}  // namespace cyclicid

#endif
