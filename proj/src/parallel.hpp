#ifndef FALSETHETA_SRC_PARALLEL_HPP
#define FALSETHETA_SRC_PARALLEL_HPP

#include <atomic>
#include <thread>
#include <vector>

namespace falsetheta::detail {

// Runs body(i) for i in [begin, end) across the given number of threads.
// Each index is claimed atomically; results must be written to per-index
// slots so the reduction order stays deterministic.
template <class Body>
void parallel_index_for(long long begin, long long end, int threads, Body&& body) {
    if (threads <= 1 || end - begin <= 1) {
        for (long long i = begin; i < end; ++i) body(i);
        return;
    }
    std::atomic<long long> next(begin);
    auto worker = [&] {
        for (;;) {
            long long i = next.fetch_add(1);
            if (i >= end) return;
            body(i);
        }
    };
    std::vector<std::thread> pool;
    int n = static_cast<int>(std::min<long long>(threads, end - begin));
    pool.reserve(n);
    for (int t = 0; t < n; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
}

}  // namespace falsetheta::detail

#endif
