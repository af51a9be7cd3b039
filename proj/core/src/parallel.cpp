#include "nilm/parallel.hpp"

#include <atomic>

namespace nilm {

std::vector<Range> partition_ranges(std::int64_t n, int pieces) {
    std::vector<Range> out;
    if (n <= 0) return out;
    std::int64_t p = std::max<std::int64_t>(1, std::min<std::int64_t>(pieces, n));
    std::int64_t base = n / p, extra = n % p;
    std::int64_t at = 0;
    for (std::int64_t i = 0; i < p; ++i) {
        std::int64_t len = base + (i < extra ? 1 : 0);
        out.push_back({at, at + len});
        at += len;
    }
    return out;
}

void parallel_over(const std::vector<Range>& pieces, int workers,
                   const std::function<void(int, const Range&)>& fn) {
    const int n = static_cast<int>(pieces.size());
    if (n == 0) return;
    workers = std::max(1, std::min(workers, n));
    if (workers == 1) {
        for (int i = 0; i < n; ++i) fn(i, pieces[i]);
        return;
    }
    std::atomic<int> next{0};
    auto body = [&]() {
        for (;;) {
            int i = next.fetch_add(1);
            if (i >= n) return;
            fn(i, pieces[i]);
        }
    };
    std::vector<std::thread> threads;
    threads.reserve(static_cast<std::size_t>(workers) - 1);
    for (int w = 1; w < workers; ++w) threads.emplace_back(body);
    body();
    for (auto& t : threads) t.join();
}

int clamp_workers(int requested) noexcept {
    int hw = static_cast<int>(std::thread::hardware_concurrency());
    if (hw <= 0) hw = 1;
    if (requested < 1) requested = 1;
    return std::min(requested, hw);
}

} // namespace nilm
