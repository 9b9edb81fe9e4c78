#include "qtorus/parallel.hpp"

#include <algorithm>
#include <atomic>
#include <thread>
#include <vector>

namespace qtorus {

namespace {
std::atomic<int> g_max_threads{0};  // 0 = hardware concurrency

int effective_threads() {
    int t = g_max_threads.load();
    if (t <= 0) t = static_cast<int>(std::thread::hardware_concurrency());
    return std::max(1, t);
}
}  // namespace

void set_max_threads(int t) { g_max_threads.store(t); }

int max_threads() { return effective_threads(); }

void parallel_for(int begin, int end, const std::function<void(int)>& fn) {
    const int count = end - begin;
    if (count <= 0) return;
    const int workers = std::min(effective_threads(), count);
    if (workers == 1 || count < 4) {
        for (int i = begin; i < end; i++) fn(i);
        return;
    }
    std::atomic<int> next{begin};
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (int w = 0; w < workers; w++)
        pool.emplace_back([&] {
            for (int i = next.fetch_add(1); i < end; i = next.fetch_add(1)) fn(i);
        });
    for (auto& th : pool) th.join();
}

}  // namespace qtorus
