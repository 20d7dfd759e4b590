#ifndef ZETAGRAPH_PARALLEL_HPP
#define ZETAGRAPH_PARALLEL_HPP

#include <cstddef>
#include <thread>
#include <vector>

namespace zetagraph {

inline unsigned default_threads() {
    unsigned h = std::thread::hardware_concurrency();
    return h ? h : 1;
}

// Runs f(i) for i in [0, count) across `threads` workers in contiguous
// blocks. Writers must target index-i slots so results are schedule
// independent.
template <class F>
void parallel_for(std::size_t count, unsigned threads, F&& f) {
    if (threads <= 1 || count < 2) {
        for (std::size_t i = 0; i < count; ++i) f(i);
        return;
    }
    threads = static_cast<unsigned>(std::min<std::size_t>(threads, count));
    std::vector<std::thread> pool;
    pool.reserve(threads);
    std::size_t chunk = (count + threads - 1) / threads;
    for (unsigned t = 0; t < threads; ++t) {
        std::size_t lo = t * chunk, hi = std::min(count, lo + chunk);
        if (lo >= hi) break;
        pool.emplace_back([lo, hi, &f] {
            for (std::size_t i = lo; i < hi; ++i) f(i);
        });
    }
    for (auto& th : pool) th.join();
}

}  // namespace zetagraph

#endif
