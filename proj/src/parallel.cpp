#include "coha/parallel.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <thread>
#include <vector>

namespace coha {

int thread_count() {
    static int count = [] {
        const char* env = std::getenv("COHA_THREADS");
        if (!env)
            return 1;
        int parsed = std::atoi(env);
        int hw = static_cast<int>(std::thread::hardware_concurrency());
        if (hw <= 0)
            hw = 1;
        return std::clamp(parsed, 1, hw);
    }();
    return count;
}

void parallel_for(std::size_t count, const std::function<void(std::size_t)>& fn) {
    int workers = thread_count();
    if (workers <= 1 || count <= 1) {
        for (std::size_t i = 0; i < count; ++i)
            fn(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    auto work = [&] {
        for (std::size_t i = next.fetch_add(1); i < count; i = next.fetch_add(1))
            fn(i);
    };
    std::vector<std::thread> threads;
    for (int t = 1; t < workers; ++t)
        threads.emplace_back(work);
    work();
    for (auto& th : threads)
        th.join();
}

} // namespace coha
