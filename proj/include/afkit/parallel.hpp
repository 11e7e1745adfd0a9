#pragma once

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

#include "afkit/af.hpp"

namespace afkit {

inline thread_local bool tl_in_parallel = false;

// Runs fn(i) for i in [0, n) on up to worker_count() threads. Nested calls run
// sequentially. The first exception thrown by any task is rethrown.
template <class Fn>
void parallel_for(int n, Fn&& fn) {
    int workers = tl_in_parallel ? 1 : std::min(worker_count(), n);
    if (workers <= 1) {
        for (int i = 0; i < n; ++i) fn(i);
        return;
    }
    std::atomic<int> next{0};
    std::exception_ptr err;
    std::mutex err_mu;
    auto body = [&] {
        bool saved = tl_in_parallel;
        tl_in_parallel = true;
        for (int i; (i = next.fetch_add(1)) < n;) {
            try {
                fn(i);
            } catch (...) {
                std::lock_guard lock(err_mu);
                if (!err) err = std::current_exception();
                next.store(n);
            }
        }
        tl_in_parallel = saved;
    };
    std::vector<std::thread> pool;
    for (int w = 1; w < workers; ++w) pool.emplace_back(body);
    body();
    for (auto& t : pool) t.join();
    if (err) std::rethrow_exception(err);
}

}  // namespace afkit
