#pragma once

#include <atomic>
#include <cstddef>
#include <functional>
#include <limits>
#include <thread>
#include <vector>

namespace umbral {

/// Runs task(i) for i in [0, count) on up to `jobs` threads and returns the
/// results in index order. When stop_after reports true for some index i,
/// indices greater than the smallest such i are skipped (left default);
/// every index up to it is always evaluated, so the ordered scan of the
/// results is identical for any thread count.
template <class Result>
std::vector<Result> ordered_parallel_map(std::size_t count, unsigned jobs,
                                         const std::function<Result(std::size_t)>& task,
                                         const std::function<bool(const Result&)>& stop_after = {}) {
    std::vector<Result> results(count);
    std::atomic<std::size_t> next{0};
    std::atomic<std::size_t> cutoff{std::numeric_limits<std::size_t>::max()};

    auto worker = [&] {
        for (;;) {
            std::size_t i = next.fetch_add(1);
            if (i >= count) return;
            if (i > cutoff.load()) continue;
            results[i] = task(i);
            if (stop_after && stop_after(results[i])) {
                std::size_t cur = cutoff.load();
                while (i < cur && !cutoff.compare_exchange_weak(cur, i)) {
                }
            }
        }
    };

    unsigned threads = jobs == 0 ? 1 : jobs;
    if (threads == 1 || count <= 1) {
        worker();
        return results;
    }
    std::vector<std::thread> pool;
    pool.reserve(threads);
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
    return results;
}

}  // namespace umbral
