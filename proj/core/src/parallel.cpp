#include <fockcalc/parallel.hpp>

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

namespace fockcalc {

int worker_count(int n) {
    if (n <= 1) return n <= 0 ? 0 : 1;
    unsigned hw = std::thread::hardware_concurrency();
    int cap = hw > 0 ? static_cast<int>(hw) : 1;
    if (const char* env = std::getenv("FOCKCALC_THREADS")) {
        try {
            int requested = std::stoi(env);
            if (requested >= 1) cap = std::min(cap, requested);
        } catch (const std::exception&) {
            // unparsable values fall back to the hardware cap
        }
    }
    return std::min(cap, n);
}

void parallel_for(int n, const std::function<void(int)>& fn) {
    if (n <= 0) return;
    int workers = worker_count(n);
    if (workers <= 1) {
        for (int i = 0; i < n; ++i) fn(i);
        return;
    }

    std::atomic<int> next{0};
    std::exception_ptr first_error;
    std::mutex error_mutex;
    auto drain = [&] {
        for (;;) {
            int i = next.fetch_add(1, std::memory_order_relaxed);
            if (i >= n) return;
            try {
                fn(i);
            } catch (...) {
                std::lock_guard lock(error_mutex);
                if (!first_error) first_error = std::current_exception();
                return;
            }
        }
    };

    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (int w = 0; w < workers; ++w) pool.emplace_back(drain);
    for (auto& t : pool) t.join();
    if (first_error) std::rethrow_exception(first_error);
}

}  // namespace fockcalc
