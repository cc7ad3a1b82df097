#pragma once
/**
 * @file parallel.hpp
 * @brief Minimal deterministic worker pool.
 *
 * Work items are identified by index; results must be written into
 * index-addressed storage so the output is byte-identical regardless of the
 * worker count or scheduling order.
 */

#include <atomic>
#include <cstdint>
#include <exception>
#include <mutex>
#include <thread>
#include <utility>
#include <vector>

namespace mockeis {

/// requested == 0 resolves to the hardware concurrency (at least 1).
inline unsigned resolve_threads(unsigned requested) {
    if (requested > 0) return requested;
    unsigned hw = std::thread::hardware_concurrency();
    return hw > 0 ? hw : 1u;
}

/// Run fn(i) for i in [0, count).  Exceptions from workers are captured and
/// the first one is rethrown on the calling thread after all workers join.
template <typename F>
void parallel_for(std::int64_t count, unsigned threads, F&& fn) {
    if (count <= 0) return;
    unsigned workers = resolve_threads(threads);
    if (workers > static_cast<unsigned>(count)) workers = static_cast<unsigned>(count);
    if (workers <= 1) {
        for (std::int64_t i = 0; i < count; ++i) fn(i);
        return;
    }

    std::atomic<std::int64_t> next{0};
    std::exception_ptr first_error;
    std::mutex error_mutex;
    auto body = [&]() {
        for (;;) {
            std::int64_t i = next.fetch_add(1, std::memory_order_relaxed);
            if (i >= count) return;
            try {
                fn(i);
            } catch (...) {
                std::lock_guard<std::mutex> lock(error_mutex);
                if (!first_error) first_error = std::current_exception();
                return;
            }
        }
    };

    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned t = 0; t < workers; ++t) pool.emplace_back(body);
    for (auto& th : pool) th.join();
    if (first_error) std::rethrow_exception(first_error);
}

}  // namespace mockeis
