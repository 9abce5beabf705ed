#ifndef PARTPOLY_PARALLEL_HPP
#define PARTPOLY_PARALLEL_HPP

#include <cstdlib>
#include <string>
#include <thread>
#include <vector>

namespace partpoly {

/// Worker cap: PARTPOLY_JOBS when set, else the hardware concurrency.
inline int default_jobs() {
    if (const char* env = std::getenv("PARTPOLY_JOBS")) {
        int j = std::atoi(env);
        if (j >= 1) return j;
    }
    unsigned hc = std::thread::hardware_concurrency();
    return hc == 0 ? 1 : static_cast<int>(hc);
}

/// Index-chunked parallel loop. f(i) must be independent across indices;
/// results keyed by index stay deterministic whatever the job count.
template <class F>
void parallel_for(long begin, long end, int jobs, F&& f) {
    if (end <= begin) return;
    long count = end - begin;
    if (jobs <= 1 || count == 1) {
        for (long i = begin; i < end; ++i) f(i);
        return;
    }
    int workers = static_cast<int>(std::min<long>(jobs, count));
    std::vector<std::thread> threads;
    threads.reserve(static_cast<std::size_t>(workers));
    long chunk = (count + workers - 1) / workers;
    for (int w = 0; w < workers; ++w) {
        long lo = begin + w * chunk;
        long hi = std::min(end, lo + chunk);
        if (lo >= hi) break;
        threads.emplace_back([lo, hi, &f] {
            for (long i = lo; i < hi; ++i) f(i);
        });
    }
    for (auto& t : threads) t.join();
}

}  // namespace partpoly

#endif
