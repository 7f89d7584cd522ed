#pragma once

// Tiny index-parallel helper: runs fn(i) for i in [0, count) on a worker
// pool.  Workers pull indices from an atomic counter; callers make fn write
// to disjoint slots so the merged result is independent of scheduling.
// jobs = 0 picks the hardware thread count; GOEBEL_JOBS overrides any value.

#include <atomic>
#include <cstdlib>
#include <exception>
#include <functional>
#include <mutex>
#include <thread>
#include <vector>

namespace goebel {

inline unsigned resolve_jobs(unsigned jobs) {
    if (const char* env = std::getenv("GOEBEL_JOBS")) {
        long v = std::strtol(env, nullptr, 10);
        if (v > 0) jobs = static_cast<unsigned>(v);
    }
    if (jobs == 0) jobs = std::thread::hardware_concurrency();
    if (jobs == 0) jobs = 1;
    return jobs;
}

inline void parallel_for(std::size_t count, unsigned jobs,
                         const std::function<void(std::size_t)>& fn) {
    jobs = resolve_jobs(jobs);
    if (jobs == 1 || count <= 1) {
        for (std::size_t i = 0; i < count; ++i) fn(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::atomic<bool> failed{false};
    std::exception_ptr error;
    std::mutex error_mutex;
    auto worker = [&] {
        for (;;) {
            std::size_t i = next.fetch_add(1);
            if (i >= count || failed.load()) return;
            try {
                fn(i);
            } catch (...) {
                std::lock_guard<std::mutex> lock(error_mutex);
                if (!error) error = std::current_exception();
                failed.store(true);
                return;
            }
        }
    };
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < jobs && t < count; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
    if (error) std::rethrow_exception(error);
}

}  // namespace goebel
