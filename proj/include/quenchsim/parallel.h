// Copyright 2026 The quenchsim Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef QUENCHSIM_PARALLEL_H
#define QUENCHSIM_PARALLEL_H

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace quenchsim {

/// Calls task(i) for i in [0, n) on up to `threads` workers. Tasks must write
/// only to their own slot of the caller's output, which keeps results
/// independent of the worker count. The first exception thrown by a task is
/// rethrown on the calling thread.
template <typename Task>
void parallel_for(std::size_t n, int threads, Task &&task) {
    std::size_t workers = std::min<std::size_t>(n, static_cast<std::size_t>(std::max(threads, 1)));
    if (workers <= 1) {
        for (std::size_t i = 0; i < n; ++i) {
            task(i);
        }
        return;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    auto worker = [&]() {
        while (true) {
            std::size_t i = next.fetch_add(1);
            if (i >= n) {
                return;
            }
            try {
                task(i);
            } catch (...) {
                std::lock_guard<std::mutex> lock(failure_mutex);
                if (!failure) {
                    failure = std::current_exception();
                }
                next.store(n);
            }
        }
    };
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) {
        pool.emplace_back(worker);
    }
    for (auto &t : pool) {
        t.join();
    }
    if (failure) {
        std::rethrow_exception(failure);
    }
}

/// Fixed split of [0, total) into `chunks` contiguous ranges.
inline std::pair<std::size_t, std::size_t> chunk_range(std::size_t total, std::size_t chunks, std::size_t index) {
    std::size_t base = total / chunks;
    std::size_t extra = total % chunks;
    std::size_t begin = index * base + std::min(index, extra);
    std::size_t end = begin + base + (index < extra ? 1 : 0);
    return {begin, end};
}

}  // namespace quenchsim

#endif  // QUENCHSIM_PARALLEL_H
