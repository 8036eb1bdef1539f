// Deterministic fork/join helpers.  Work is split into contiguous blocks,
// block results are merged in block order, so the outcome is independent of
// the worker count (all arithmetic downstream is exact).
#pragma once

#include <cstddef>
#include <functional>
#include <future>
#include <vector>

namespace voaforge {

void set_worker_count(int k);
int worker_count();

// reduce(init, fn(i)) over i in [0, n), merged in index order.
template <class R, class Fn, class Merge>
R parallel_reduce(std::size_t n, R init, Fn&& fn, Merge&& merge) {
    int workers = worker_count();
    if (workers <= 1 || n < 2) {
        R acc = std::move(init);
        for (std::size_t i = 0; i < n; ++i) merge(acc, fn(i));
        return acc;
    }
    std::size_t blocks = std::min<std::size_t>(static_cast<std::size_t>(workers), n);
    std::vector<std::future<R>> futs;
    futs.reserve(blocks);
    for (std::size_t b = 0; b < blocks; ++b) {
        std::size_t lo = n * b / blocks, hi = n * (b + 1) / blocks;
        futs.push_back(std::async(std::launch::async, [&, lo, hi] {
            R acc{};
            for (std::size_t i = lo; i < hi; ++i) merge(acc, fn(i));
            return acc;
        }));
    }
    R acc = std::move(init);
    for (auto& f : futs) merge(acc, f.get());
    return acc;
}

}  // namespace voaforge
