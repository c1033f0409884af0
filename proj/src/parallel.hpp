#pragma once

#include <atomic>
#include <exception>
#include <functional>
#include <thread>
#include <vector>

namespace fer::detail {

// Runs fn(i) for i in [0, n) on up to `jobs` threads. The first exception (by
// lowest index) is rethrown after all workers join, so failure behaviour does
// not depend on scheduling.
inline void parallel_for(std::size_t n, int jobs, const std::function<void(std::size_t)>& fn) {
    if (jobs <= 1 || n <= 1) {
        for (std::size_t i = 0; i < n; ++i) fn(i);
        return;
    }
    const int workers = static_cast<int>(std::min<std::size_t>(static_cast<std::size_t>(jobs), n));
    std::atomic<std::size_t> next{0};
    std::vector<std::pair<std::size_t, std::exception_ptr>> errors(n, {0, nullptr});
    std::atomic<bool> failed{false};
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(workers));
    for (int w = 0; w < workers; ++w) {
        pool.emplace_back([&] {
            for (;;) {
                const std::size_t i = next.fetch_add(1);
                if (i >= n || failed.load()) return;
                try {
                    fn(i);
                } catch (...) {
                    errors[i] = {i, std::current_exception()};
                    failed.store(true);
                }
            }
        });
    }
    for (auto& t : pool) t.join();
    if (failed.load()) {
        for (auto& [i, ep] : errors) {
            if (ep) std::rethrow_exception(ep);
        }
    }
}

}  // namespace fer::detail
