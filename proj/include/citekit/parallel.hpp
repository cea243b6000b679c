#pragma once

#include <algorithm>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace citekit {

// Runs fn(begin, end) over [0, n) split into contiguous chunks, one per
// worker. Callers own the merge of per-chunk results; keep merges ordered by
// chunk index so output stays deterministic.
template <typename Fn>
void parallel_for(size_t n, unsigned threads, Fn&& fn) {
    if (n == 0) return;
    unsigned hw = std::max(1u, std::thread::hardware_concurrency());
    unsigned workers = std::min<size_t>(std::max(1u, threads ? threads : hw), n);
    if (workers <= 1) {
        fn(static_cast<size_t>(0), n);
        return;
    }
    std::vector<std::thread> pool;
    std::exception_ptr error;
    std::mutex error_mu;
    size_t chunk = (n + workers - 1) / workers;
    for (unsigned w = 0; w < workers; ++w) {
        size_t begin = w * chunk;
        size_t end = std::min(n, begin + chunk);
        if (begin >= end) break;
        pool.emplace_back([&, begin, end] {
            try {
                fn(begin, end);
            } catch (...) {
                std::lock_guard<std::mutex> lock(error_mu);
                if (!error) error = std::current_exception();
            }
        });
    }
    for (auto& t : pool) t.join();
    if (error) std::rethrow_exception(error);
}

}  // namespace citekit
