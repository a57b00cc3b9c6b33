#pragma once

#include <cstdint>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace cosec {

inline int resolve_threads(int requested) {
    if (requested > 0) return requested;
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(hw);
}

// Static block partition of [begin, end); each index is processed exactly once
// by a pure body writing to index-addressed storage, so results do not depend
// on the schedule.  The first exception thrown in any worker is rethrown.
template <typename Body>
void parallel_for(std::int64_t begin, std::int64_t end, int threads, const Body& body) {
    const std::int64_t count = end - begin;
    if (count <= 0) return;
    threads = std::min<std::int64_t>(resolve_threads(threads), count);
    if (threads <= 1) {
        for (std::int64_t i = begin; i < end; ++i) body(i);
        return;
    }
    std::vector<std::thread> pool;
    std::exception_ptr first_error;
    std::mutex error_mutex;
    const std::int64_t chunk = (count + threads - 1) / threads;
    for (int t = 0; t < threads; ++t) {
        const std::int64_t lo = begin + t * chunk;
        const std::int64_t hi = std::min(end, lo + chunk);
        if (lo >= hi) break;
        pool.emplace_back([&, lo, hi] {
            try {
                for (std::int64_t i = lo; i < hi; ++i) body(i);
            } catch (...) {
                std::lock_guard<std::mutex> lock(error_mutex);
                if (!first_error) first_error = std::current_exception();
            }
        });
    }
    for (auto& th : pool) th.join();
    if (first_error) std::rethrow_exception(first_error);
}

}  // namespace cosec
