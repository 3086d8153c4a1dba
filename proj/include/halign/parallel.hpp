#pragma once

#include <cstddef>
#include <exception>
#include <functional>
#include <thread>
#include <vector>

namespace halign {

/// Runs fn(i) for i in [0, n). Each index writes only to its own output
/// slot, so results are identical for any worker count. threads <= 0 uses
/// the hardware concurrency; threads == 1 runs inline.
inline void parallel_for(std::size_t n, int threads, const std::function<void(std::size_t)>& fn) {
    if (n == 0) return;
    unsigned int workers = threads > 0 ? static_cast<unsigned int>(threads)
                                       : std::max(1u, std::thread::hardware_concurrency());
    if (workers > n) workers = static_cast<unsigned int>(n);
    if (workers <= 1) {
        for (std::size_t i = 0; i < n; ++i) fn(i);
        return;
    }
    std::vector<std::thread> pool;
    std::vector<std::exception_ptr> errors(workers);
    pool.reserve(workers);
    for (unsigned int w = 0; w < workers; ++w) {
        pool.emplace_back([&, w]() {
            try {
                for (std::size_t i = w; i < n; i += workers) fn(i);
            } catch (...) {
                errors[w] = std::current_exception();
            }
        });
    }
    for (auto& t : pool) t.join();
    for (auto& e : errors) {
        if (e) std::rethrow_exception(e);
    }
}

}  // namespace halign
