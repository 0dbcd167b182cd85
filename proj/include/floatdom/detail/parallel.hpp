#ifndef FLOATDOM_DETAIL_PARALLEL_HPP
#define FLOATDOM_DETAIL_PARALLEL_HPP

#include <algorithm>
#include <cstddef>
#include <exception>
#include <thread>
#include <vector>

namespace floatdom::detail {

/// Runs body(i) for i in [0, count). Each index is handled by exactly one
/// worker and writes only its own output slot, so results do not depend on
/// the thread count. The first exception thrown (lowest chunk) is rethrown.
template <typename Body>
void parallel_for(std::size_t count, unsigned threads, Body&& body) {
    if (threads <= 1 || count < 2) {
        for (std::size_t i = 0; i < count; ++i) body(i);
        return;
    }
    const std::size_t workers = std::min<std::size_t>(threads, count);
    std::vector<std::exception_ptr> errors(workers);
    {
        std::vector<std::jthread> pool;
        pool.reserve(workers);
        for (std::size_t w = 0; w < workers; ++w) {
            pool.emplace_back([&, w] {
                const std::size_t begin = count * w / workers;
                const std::size_t end = count * (w + 1) / workers;
                try {
                    for (std::size_t i = begin; i < end; ++i) body(i);
                } catch (...) {
                    errors[w] = std::current_exception();
                }
            });
        }
    }
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);
}

} // namespace floatdom::detail

#endif // FLOATDOM_DETAIL_PARALLEL_HPP
