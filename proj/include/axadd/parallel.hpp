#pragma once

#include <atomic>
#include <cstdint>
#include <thread>
#include <vector>

namespace axadd {

inline unsigned resolve_threads(unsigned threads) {
    if (threads != 0) return threads;
    unsigned hc = std::thread::hardware_concurrency();
    return hc == 0 ? 1 : hc;
}

/// Runs fn(chunk_index, begin, end) over fixed-size index chunks. Chunk
/// boundaries depend only on (total, chunk_size), never on the worker count,
/// so per-chunk results reduced in chunk order are deterministic.
template <typename Fn>
void for_each_chunk(uint64_t total, uint64_t chunk_size, unsigned threads, Fn&& fn) {
    const uint64_t n_chunks = chunk_size == 0 ? 0 : (total + chunk_size - 1) / chunk_size;
    if (n_chunks == 0) return;
    const unsigned workers =
        static_cast<unsigned>(std::min<uint64_t>(resolve_threads(threads), n_chunks));
    if (workers <= 1) {
        for (uint64_t c = 0; c < n_chunks; ++c)
            fn(c, c * chunk_size, std::min(total, (c + 1) * chunk_size));
        return;
    }
    std::atomic<uint64_t> next{0};
    auto work = [&] {
        for (uint64_t c = next.fetch_add(1); c < n_chunks; c = next.fetch_add(1))
            fn(c, c * chunk_size, std::min(total, (c + 1) * chunk_size));
    };
    std::vector<std::thread> pool;
    pool.reserve(workers - 1);
    for (unsigned i = 1; i < workers; ++i) pool.emplace_back(work);
    work();
    for (auto& t : pool) t.join();
}

} // namespace axadd
