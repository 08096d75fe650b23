#ifndef GPEDIM_PARALLEL_HPP
#define GPEDIM_PARALLEL_HPP

#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace gpedim {

// GPEDIM_WORKERS if set to a positive integer, otherwise the hardware concurrency (at least 1).
unsigned worker_count();

// Evaluates f(0), ..., f(count - 1) on up to `workers` threads and returns the results in
// index order. The first exception thrown by any call is rethrown after all workers stop.
template <class F>
auto parallel_map(std::size_t count, F f, unsigned workers = 0) -> std::vector<decltype(f(std::size_t{}))> {
    using R = decltype(f(std::size_t{}));
    std::vector<R> out(count);
    if (workers == 0) {
        workers = worker_count();
    }
    if (workers > count) {
        workers = static_cast<unsigned>(count);
    }
    if (workers <= 1) {
        for (std::size_t i = 0; i < count; ++i) {
            out[i] = f(i);
        }
        return out;
    }
    std::atomic<std::size_t> next{0};
    std::atomic<bool> failed{false};
    std::exception_ptr error;
    std::mutex error_mutex;
    auto work = [&] {
        for (std::size_t i = next++; i < count && !failed; i = next++) {
            try {
                out[i] = f(i);
            } catch (...) {
                const std::lock_guard lock(error_mutex);
                if (!error) {
                    error = std::current_exception();
                }
                failed = true;
            }
        }
    };
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) {
        pool.emplace_back(work);
    }
    for (auto& t : pool) {
        t.join();
    }
    if (error) {
        std::rethrow_exception(error);
    }
    return out;
}

} // namespace gpedim

#endif
