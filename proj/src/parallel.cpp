#include "rvnorm/parallel.hpp"

#include <atomic>
#include <cstdlib>
#include <exception>
#include <thread>
#include <vector>

namespace rvnorm {

namespace {
thread_local bool in_parallel_region = false;
} // namespace

int max_threads() {
    static const int cap = [] {
        if (const char* env = std::getenv("RVNORM_THREADS")) {
            const int v = std::atoi(env);
            if (v >= 1) return v;
        }
        const unsigned hw = std::thread::hardware_concurrency();
        return hw > 0 ? static_cast<int>(hw) : 1;
    }();
    return cap;
}

void parallel_for(int count, const std::function<void(int)>& fn) {
    if (count <= 0) return;
    const int workers = in_parallel_region ? 1 : std::min(max_threads(), count);
    if (workers <= 1) {
        const bool was_nested = in_parallel_region;
        in_parallel_region = true;
        for (int i = 0; i < count; ++i) fn(i);
        in_parallel_region = was_nested;
        return;
    }

    std::atomic<int> next{0};
    std::exception_ptr error;
    std::atomic<bool> failed{false};
    auto body = [&] {
        in_parallel_region = true;
        for (;;) {
            const int i = next.fetch_add(1);
            if (i >= count || failed.load()) break;
            try {
                fn(i);
            } catch (...) {
                if (!failed.exchange(true)) error = std::current_exception();
                break;
            }
        }
    };

    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(workers) - 1);
    for (int w = 1; w < workers; ++w) pool.emplace_back(body);
    body();
    in_parallel_region = false;
    for (auto& t : pool) t.join();
    if (error) std::rethrow_exception(error);
}

} // namespace rvnorm
