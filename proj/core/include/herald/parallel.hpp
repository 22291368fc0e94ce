// parallel.hpp — deterministic chunked parallel loop.
//
// Work is split into fixed-size chunks regardless of the worker count, and
// any reduction is expected to combine per-chunk results in chunk order, so
// results do not depend on scheduling.

#pragma once

#include <atomic>
#include <cstddef>
#include <exception>
#include <functional>
#include <thread>
#include <vector>

namespace herald {

inline int resolve_thread_count(int requested) {
    if (requested > 0) return requested;
    const unsigned hw = std::thread::hardware_concurrency();
    return hw > 0 ? static_cast<int>(hw) : 1;
}

// Invokes body(chunk_index, begin, end) for consecutive half-open ranges
// covering [0, count). Chunk boundaries are a pure function of count and
// chunk_size; threads only choose which chunk to run next.
inline void parallel_chunks(std::size_t count, std::size_t chunk_size, int threads,
                            const std::function<void(std::size_t, std::size_t, std::size_t)>& body) {
    if (count == 0) return;
    if (chunk_size == 0) chunk_size = 1;
    const std::size_t n_chunks = (count + chunk_size - 1) / chunk_size;
    const int n_threads = std::min<std::size_t>(resolve_thread_count(threads), n_chunks);

    if (n_threads <= 1) {
        for (std::size_t c = 0; c < n_chunks; ++c) {
            const std::size_t begin = c * chunk_size;
            body(c, begin, std::min(begin + chunk_size, count));
        }
        return;
    }

    std::atomic<std::size_t> next{0};
    std::exception_ptr error;
    std::atomic<bool> failed{false};

    auto worker = [&] {
        for (;;) {
            const std::size_t c = next.fetch_add(1);
            if (c >= n_chunks || failed.load()) return;
            const std::size_t begin = c * chunk_size;
            try {
                body(c, begin, std::min(begin + chunk_size, count));
            } catch (...) {
                if (!failed.exchange(true)) error = std::current_exception();
                return;
            }
        }
    };

    std::vector<std::thread> pool;
    pool.reserve(n_threads);
    for (int i = 0; i < n_threads; ++i) pool.emplace_back(worker);
    for (std::thread& t : pool) t.join();
    if (failed.load() && error) std::rethrow_exception(error);
}

}  // namespace herald
