#pragma once

// Order-preserving parallel map: result i is f(i) regardless of the number of
// worker threads.

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <optional>
#include <thread>
#include <vector>

namespace mcc {

inline unsigned default_jobs() {
    unsigned h = std::thread::hardware_concurrency();
    return h == 0 ? 1 : h;
}

template <class F>
auto parallel_map(std::size_t count, unsigned jobs, F&& f) -> std::vector<decltype(f(std::size_t{}))> {
    using R = decltype(f(std::size_t{}));
    std::vector<std::optional<R>> slots(count);
    jobs = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(std::max<std::size_t>(count, 1))));

    std::vector<std::exception_ptr> errors(count);
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (;;) {
            std::size_t i = next.fetch_add(1);
            if (i >= count) return;
            try {
                slots[i].emplace(f(i));
            } catch (...) {
                errors[i] = std::current_exception();
            }
        }
    };
    if (jobs == 1) {
        worker();
    } else {
        std::vector<std::thread> threads;
        for (unsigned t = 0; t < jobs; ++t) threads.emplace_back(worker);
        for (auto& t : threads) t.join();
    }
    // The lowest failing index wins, so errors are reproducible too.
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);

    std::vector<R> out;
    out.reserve(count);
    for (auto& s : slots) out.push_back(std::move(*s));
    return out;
}

}  // namespace mcc
