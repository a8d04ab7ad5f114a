#pragma once

#include <algorithm>
#include <cstddef>
#include <exception>
#include <functional>
#include <optional>
#include <thread>
#include <vector>

namespace thzkit {

/// Evaluates fn(i) for i in [0, n) on up to `workers` threads. Results come
/// back in index order; the exception of the lowest failing index is
/// rethrown, so outcomes do not depend on scheduling.
template <class Fn>
auto parallel_map(std::size_t n, Fn fn, unsigned workers = std::thread::hardware_concurrency())
    -> std::vector<decltype(fn(std::size_t{}))> {
    using T = decltype(fn(std::size_t{}));
    std::vector<std::optional<T>> slots(n);
    std::vector<std::exception_ptr> errors(n);
    workers = std::max(1u, std::min<unsigned>(workers, static_cast<unsigned>(std::max<std::size_t>(n, 1))));
    if (n < 4) workers = 1;
    auto body = [&](std::size_t first) {
        for (std::size_t i = first; i < n; i += workers) {
            try {
                slots[i].emplace(fn(i));
            } catch (...) {
                errors[i] = std::current_exception();
            }
        }
    };
    if (workers == 1) {
        body(0);
    } else {
        std::vector<std::jthread> pool;
        pool.reserve(workers);
        for (unsigned w = 0; w < workers; ++w) pool.emplace_back(body, w);
    }
    for (const auto& e : errors) {
        if (e) std::rethrow_exception(e);
    }
    std::vector<T> out;
    out.reserve(n);
    for (auto& s : slots) out.push_back(std::move(*s));
    return out;
}

}  // namespace thzkit
