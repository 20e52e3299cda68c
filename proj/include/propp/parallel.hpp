#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace propp {

// Process-wide worker count used by every parallel kernel. Results never
// depend on it: work is split into tasks whose boundaries are fixed by the
// problem size alone, and partial results are combined in task order.
void set_thread_count(unsigned n);
unsigned thread_count();

// Runs fn(task) for task in [0, tasks) on up to thread_count() workers and
// rethrows the first exception (lowest task index) after all workers join.
template <class Fn>
void parallel_for(std::size_t tasks, Fn&& fn)
{
    const std::size_t workers = std::min<std::size_t>(thread_count(), tasks);
    if (workers <= 1) {
        for (std::size_t t = 0; t < tasks; ++t)
            fn(t);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::exception_ptr> errors(tasks);
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) {
        pool.emplace_back([&] {
            for (std::size_t t = next++; t < tasks; t = next++) {
                try {
                    fn(t);
                } catch (...) {
                    errors[t] = std::current_exception();
                }
            }
        });
    }
    for (auto& th : pool)
        th.join();
    for (auto& e : errors)
        if (e)
            std::rethrow_exception(e);
}

// parallel_for that collects one result per task, in task order.
template <class T, class Fn>
std::vector<T> parallel_map(std::size_t tasks, Fn&& fn)
{
    std::vector<T> out(tasks);
    parallel_for(tasks, [&](std::size_t t) { out[t] = fn(t); });
    return out;
}

} // namespace propp
