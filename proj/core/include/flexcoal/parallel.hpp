// Copyright 2026 The flexcoal Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef FLEXCOAL_PARALLEL_HPP
#define FLEXCOAL_PARALLEL_HPP

#include <atomic>
#include <cstdint>
#include <thread>
#include <vector>

namespace flexcoal {

/// Runs f(i) for i in [0, n) on up to `jobs` threads. Work items must be
/// independent; results are indexed by i so assembly order never depends on
/// the schedule.
template <typename F>
void parallel_for_index(std::int64_t n, int jobs, F&& f) {
    if (jobs <= 1 || n <= 1) {
        for (std::int64_t i = 0; i < n; ++i) f(i);
        return;
    }
    const int n_threads = static_cast<int>(std::min<std::int64_t>(jobs, n));
    std::atomic<std::int64_t> next{0};
    std::vector<std::thread> workers;
    workers.reserve(n_threads);
    for (int t = 0; t < n_threads; ++t) {
        workers.emplace_back([&] {
            for (std::int64_t i = next.fetch_add(1); i < n; i = next.fetch_add(1))
                f(i);
        });
    }
    for (auto& w : workers) w.join();
}

} // namespace flexcoal

#endif // FLEXCOAL_PARALLEL_HPP
