#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <optional>
#include <thread>
#include <vector>

namespace coalmanip {

/// Worker count from COALMANIP_WORKERS, else 1.
int default_workers();

/// Runs fn(i) for every i in [0, count) on up to `workers` threads. The
/// first exception thrown by any task is rethrown after all threads join.
template <typename Fn>
void parallel_for(std::size_t count, int workers, Fn&& fn) {
    const std::size_t threads = std::min<std::size_t>(static_cast<std::size_t>(std::max(workers, 1)), count);
    if (threads <= 1) {
        for (std::size_t i = 0; i < count; ++i) fn(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr error;
    std::mutex error_mutex;
    std::vector<std::thread> pool;
    for (std::size_t t = 0; t < threads; ++t) {
        pool.emplace_back([&] {
            try {
                for (std::size_t i = next++; i < count; i = next++) fn(i);
            } catch (...) {
                std::lock_guard lock(error_mutex);
                if (!error) error = std::current_exception();
                next = count;
            }
        });
    }
    for (auto& th : pool) th.join();
    if (error) std::rethrow_exception(error);
}

/// Smallest i in [0, count) with pred(i), independent of scheduling.
template <typename Pred>
std::optional<std::size_t> parallel_find_first(std::size_t count, int workers, Pred&& pred) {
    std::atomic<std::size_t> best{count};
    parallel_for(count, workers, [&](std::size_t i) {
        if (i >= best.load()) return;
        if (!pred(i)) return;
        std::size_t current = best.load();
        while (i < current && !best.compare_exchange_weak(current, i)) {
        }
    });
    const std::size_t found = best.load();
    if (found >= count) return std::nullopt;
    return found;
}

}  // namespace coalmanip
