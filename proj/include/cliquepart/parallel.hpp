#pragma once

#include <algorithm>
#include <cstddef>
#include <thread>
#include <vector>

namespace cliquepart {

/// 0 means "use available parallelism".
inline unsigned resolve_threads(unsigned requested) {
    if (requested != 0) return requested;
    return std::max(1u, std::thread::hardware_concurrency());
}

/// Runs fn(begin, end, worker) over contiguous chunks of [0, count).
template <class Fn>
void parallel_chunks(std::size_t count, unsigned threads, Fn&& fn) {
    threads = std::max(1u, std::min<unsigned>(resolve_threads(threads), static_cast<unsigned>(std::max<std::size_t>(count, 1))));
    if (threads == 1) {
        fn(std::size_t{0}, count, 0u);
        return;
    }
    std::vector<std::jthread> workers;
    workers.reserve(threads);
    const std::size_t step = (count + threads - 1) / threads;
    for (unsigned w = 0; w < threads; ++w) {
        const std::size_t begin = std::min(count, w * step);
        const std::size_t end = std::min(count, begin + step);
        workers.emplace_back([&fn, begin, end, w] { fn(begin, end, w); });
    }
}

}  // namespace cliquepart
