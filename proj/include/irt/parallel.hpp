#pragma once

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <thread>
#include <vector>

namespace irt {

// IRT_LAB_THREADS env var, else hardware concurrency, else 1.
inline int default_thread_count() {
    if (const char* env = std::getenv("IRT_LAB_THREADS")) {
        int v = std::atoi(env);
        if (v >= 1) return v;
    }
    unsigned hc = std::thread::hardware_concurrency();
    return hc > 0 ? static_cast<int>(hc) : 1;
}

// Runs fn(i) for i in [begin, end) across up to `threads` workers, blocked
// contiguously. fn must be safe to run concurrently for distinct i.
inline void parallel_for(std::size_t begin, std::size_t end, int threads,
                         const std::function<void(std::size_t)>& fn) {
    std::size_t count = end > begin ? end - begin : 0;
    if (count == 0) return;
    int workers = std::max(1, std::min<int>(threads, static_cast<int>(count)));
    if (workers == 1) {
        for (std::size_t i = begin; i < end; ++i) fn(i);
        return;
    }
    std::vector<std::thread> pool;
    pool.reserve(workers);
    std::size_t chunk = (count + workers - 1) / workers;
    for (int w = 0; w < workers; ++w) {
        std::size_t lo = begin + chunk * static_cast<std::size_t>(w);
        std::size_t hi = std::min(end, lo + chunk);
        if (lo >= hi) break;
        pool.emplace_back([lo, hi, &fn] {
            for (std::size_t i = lo; i < hi; ++i) fn(i);
        });
    }
    for (auto& t : pool) t.join();
}

}  // namespace irt
