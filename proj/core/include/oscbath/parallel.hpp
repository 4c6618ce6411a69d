// parallel.hpp — deterministic chunked parallelism. Work is pre-partitioned
// into fixed chunks; workers pull chunk ids from an atomic counter and results
// are reduced in chunk order, so outputs do not depend on the thread count.
#pragma once

#include <atomic>
#include <cstdlib>
#include <exception>
#include <functional>
#include <mutex>
#include <thread>
#include <vector>

namespace oscbath {

inline int thread_count() {
    if (const char* env = std::getenv("OSCBATH_THREADS")) {
        const int n = std::atoi(env);
        if (n >= 1) return n;
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(hw > 8 ? 8 : hw);
}

// Evaluates fn(chunk) for chunk = 0..n_chunks-1 and returns results indexed by
// chunk id. fn must not touch shared mutable state.
template <typename T>
std::vector<T> parallel_map_chunks(std::size_t n_chunks, const std::function<T(std::size_t)>& fn) {
    std::vector<T> results(n_chunks);
    const int workers = std::min<std::size_t>(thread_count(), n_chunks ? n_chunks : 1);
    if (workers <= 1) {
        for (std::size_t c = 0; c < n_chunks; ++c) results[c] = fn(c);
        return results;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr error;
    std::mutex error_mtx;
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (int w = 0; w < workers; ++w) {
        pool.emplace_back([&] {
            try {
                for (;;) {
                    const std::size_t c = next.fetch_add(1);
                    if (c >= n_chunks) return;
                    results[c] = fn(c);
                }
            } catch (...) {
                std::lock_guard lock(error_mtx);
                if (!error) error = std::current_exception();
                next.store(n_chunks);  // drain remaining work
            }
        });
    }
    for (auto& t : pool) t.join();
    if (error) std::rethrow_exception(error);
    return results;
}

}  // namespace oscbath
