#pragma once

#include <cstdint>
#include <functional>
#include <thread>
#include <vector>

namespace nilm {

// Fixed partition of [0, n) into `pieces` near-equal contiguous ranges.
// The partition depends only on (n, pieces), never on the worker count, so
// per-piece results can be reduced in piece order for bit-stable output.
struct Range {
    std::int64_t begin = 0;
    std::int64_t end = 0;
    std::int64_t size() const noexcept { return end - begin; }
};

std::vector<Range> partition_ranges(std::int64_t n, int pieces);

// Runs fn(piece_index, range) for every piece on up to `workers` threads.
// Workers claim pieces in index order; fn must only write piece-local state.
void parallel_over(const std::vector<Range>& pieces, int workers,
                   const std::function<void(int, const Range&)>& fn);

int clamp_workers(int requested) noexcept;

} // namespace nilm
