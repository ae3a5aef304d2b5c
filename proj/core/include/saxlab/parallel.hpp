#pragma once

#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace saxlab {

/// Worker count for data-parallel loops: hardware concurrency capped by
/// the SAXLAB_THREADS environment variable, never below 1.
unsigned thread_budget();

/// Runs fn(i) for i in [0, count) across the thread budget. Each index is
/// processed exactly once; results must go to per-index slots so the
/// outcome is identical to the serial loop. The first exception thrown by
/// any worker is rethrown on the calling thread.
template <typename Fn>
void parallel_for(std::size_t count, Fn&& fn) {
    const unsigned workers = thread_budget();
    if (workers <= 1 || count < 2) {
        for (std::size_t i = 0; i < count; ++i) fn(i);
        return;
    }
    const std::size_t stripes = std::min<std::size_t>(workers, count);
    std::exception_ptr failure;
    std::mutex failure_mutex;
    std::vector<std::thread> pool;
    pool.reserve(stripes);
    for (std::size_t stripe = 0; stripe < stripes; ++stripe) {
        pool.emplace_back([stripe, stripes, count, &fn, &failure, &failure_mutex] {
            try {
                for (std::size_t i = stripe; i < count; i += stripes) fn(i);
            } catch (...) {
                const std::lock_guard<std::mutex> lock(failure_mutex);
                if (!failure) failure = std::current_exception();
            }
        });
    }
    for (auto& t : pool) t.join();
    if (failure) std::rethrow_exception(failure);
}

} // namespace saxlab
