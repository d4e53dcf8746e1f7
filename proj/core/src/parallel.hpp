#pragma once

#include <algorithm>
#include <cstddef>
#include <exception>
#include <functional>
#include <thread>
#include <vector>

namespace iriscap::detail {

inline unsigned resolve_threads(unsigned requested) {
    if (requested != 0) return requested;
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : hw;
}

/// Runs fn(begin, end) over contiguous chunks of [0, count) on `threads`
/// workers. fn must only touch per-index state, so results do not depend on
/// scheduling. The first worker exception (by worker index) is rethrown.
inline void parallel_chunks(std::size_t count, unsigned threads,
                            const std::function<void(std::size_t, std::size_t)>& fn) {
    if (count == 0) return;
    const unsigned t = static_cast<unsigned>(
        std::min<std::size_t>(resolve_threads(threads), count));
    if (t <= 1) {
        fn(0, count);
        return;
    }
    const std::size_t chunk = (count + t - 1) / t;
    std::vector<std::exception_ptr> errors(t);
    std::vector<std::thread> workers;
    workers.reserve(t);
    for (unsigned w = 0; w < t; ++w) {
        const std::size_t begin = std::min<std::size_t>(w * chunk, count);
        const std::size_t end = std::min<std::size_t>(begin + chunk, count);
        workers.emplace_back([&, w, begin, end] {
            try {
                if (begin < end) fn(begin, end);
            } catch (...) {
                errors[w] = std::current_exception();
            }
        });
    }
    for (auto& worker : workers) worker.join();
    for (const auto& err : errors) {
        if (err) std::rethrow_exception(err);
    }
}

}  // namespace iriscap::detail
