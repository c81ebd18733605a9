#pragma once

#include <cstdint>
#include <exception>
#include <mutex>
#include <thread>
#include <utility>
#include <vector>

namespace opoly {

/// 0 means "use the machine parallelism"; the result is always >= 1.
inline unsigned resolve_threads(unsigned requested) {
    if (requested != 0) return requested;
    unsigned hw = std::thread::hardware_concurrency();
    return hw != 0 ? hw : 1;
}

/// Runs fn(chunk_begin, chunk_end) over a static partition of [begin, end).
/// Chunks are contiguous and disjoint, so per-index writes need no locking.
template <class Fn>
void parallel_chunks(std::uint32_t begin, std::uint32_t end, unsigned threads, Fn fn) {
    threads = resolve_threads(threads);
    const std::uint32_t total = end > begin ? end - begin : 0;
    if (total == 0) return;
    if (threads == 1 || total == 1) {
        fn(begin, end);
        return;
    }
    if (threads > total) threads = total;
    std::vector<std::thread> pool;
    pool.reserve(threads);
    std::exception_ptr first_error;
    std::mutex error_mutex;
    const std::uint32_t chunk = (total + threads - 1) / threads;
    for (unsigned t = 0; t < threads; ++t) {
        const std::uint32_t lo = begin + t * chunk;
        if (lo >= end) break;
        const std::uint32_t hi = lo + chunk < end ? lo + chunk : end;
        pool.emplace_back([&, lo, hi] {
            try {
                fn(lo, hi);
            } catch (...) {
                std::lock_guard<std::mutex> lock(error_mutex);
                if (!first_error) first_error = std::current_exception();
            }
        });
    }
    for (auto& th : pool) th.join();
    if (first_error) std::rethrow_exception(first_error);
}

/// Sums fn(i) over [begin, end). The accumulator type is exact integer
/// arithmetic everywhere in this project, so the chunked reduction is
/// bit-identical for every thread count.
template <class T, class Fn>
T parallel_sum(std::uint32_t begin, std::uint32_t end, unsigned threads, Fn fn) {
    threads = resolve_threads(threads);
    if (threads == 1 || end <= begin + 1) {
        T acc{0};
        for (std::uint32_t i = begin; i < end; ++i) acc += fn(i);
        return acc;
    }
    const unsigned workers = threads;
    std::vector<T> partial(workers, T{0});
    parallel_chunks(0, workers, workers, [&](std::uint32_t wlo, std::uint32_t whi) {
        const std::uint32_t total = end - begin;
        const std::uint32_t chunk = (total + workers - 1) / workers;
        for (std::uint32_t w = wlo; w < whi; ++w) {
            const std::uint32_t lo = begin + w * chunk;
            if (lo >= end) continue;
            const std::uint32_t hi = lo + chunk < end ? lo + chunk : end;
            T acc{0};
            for (std::uint32_t i = lo; i < hi; ++i) acc += fn(i);
            partial[w] = acc;
        }
    });
    T acc{0};
    for (const T& p : partial) acc += p;
    return acc;
}

} // namespace opoly
