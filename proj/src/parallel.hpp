#pragma once

#include <algorithm>
#include <cstddef>
#include <future>
#include <vector>

namespace gpoly::detail {

// out[i] = fn(i) for i < count, at most `threads` tasks in flight.
template <class Fn>
auto parallel_map(std::size_t count, int threads, Fn fn) -> std::vector<decltype(fn(std::size_t{}))> {
    using T = decltype(fn(std::size_t{}));
    std::vector<T> out;
    out.reserve(count);
    const std::size_t width = static_cast<std::size_t>(std::max(1, threads));
    if (width == 1) {
        for (std::size_t i = 0; i < count; ++i) out.push_back(fn(i));
        return out;
    }
    for (std::size_t start = 0; start < count; start += width) {
        std::vector<std::future<T>> batch;
        for (std::size_t i = start; i < std::min(count, start + width); ++i)
            batch.push_back(std::async(std::launch::async, fn, i));
        for (auto& f : batch) out.push_back(f.get());
    }
    return out;
}

}  // namespace gpoly::detail
