#pragma once

#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace cypres::detail {

// Runs fn(i) for i in [0, count) on a pool of `jobs` workers (0 = hardware
// concurrency). Callers keep determinism by writing results into slot i.
// The first exception, if any, is rethrown after the pool drains.
template <typename Fn>
void parallel_for(std::size_t count, unsigned jobs, Fn fn) {
    if (count == 0) return;
    if (jobs == 0) jobs = std::max(1u, std::thread::hardware_concurrency());
    if (jobs > count) jobs = static_cast<unsigned>(count);

    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    auto worker = [&] {
        try {
            for (;;) {
                const std::size_t i = next.fetch_add(1);
                if (i >= count) return;
                fn(i);
            }
        } catch (...) {
            std::lock_guard<std::mutex> lock(failure_mutex);
            if (!failure) failure = std::current_exception();
        }
    };

    if (jobs <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(jobs);
        for (unsigned t = 0; t < jobs; ++t) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }
    if (failure) std::rethrow_exception(failure);
}

}  // namespace cypres::detail
