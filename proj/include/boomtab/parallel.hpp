#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace boomtab {

// Worker count from BOOMTAB_THREADS, else hardware concurrency. Never affects results.
unsigned worker_count();

// Calls fn(index, worker) for every index in [0, count). Work is handed out in
// index order from a shared counter; callers merge per-worker state themselves.
// The first exception thrown by any worker is rethrown after all workers stop.
template <class Fn>
void parallel_for(std::size_t count, Fn&& fn) {
    const unsigned workers = static_cast<unsigned>(
        std::min<std::size_t>(worker_count(), count == 0 ? 1 : count));
    if (workers <= 1) {
        for (std::size_t i = 0; i < count; ++i) fn(i, 0u);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mu;
    {
        std::vector<std::jthread> pool;
        pool.reserve(workers);
        for (unsigned w = 0; w < workers; ++w) {
            pool.emplace_back([&, w] {
                try {
                    for (std::size_t i = next++; i < count; i = next++) fn(i, w);
                } catch (...) {
                    std::lock_guard lock(failure_mu);
                    if (!failure) failure = std::current_exception();
                    next = count;
                }
            });
        }
    }
    if (failure) std::rethrow_exception(failure);
}

}  // namespace boomtab
