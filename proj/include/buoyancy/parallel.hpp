#pragma once

#include <cstddef>
#include <functional>
#include <vector>

namespace buoyancy {

/// Serial is the reference path; Parallel runs independent items on OpenMP threads.
/// Both produce identical results in identical order.
enum class Execution { Serial, Parallel };

/// Thread cap from BUOYANCY_THREADS (0 or unset = OpenMP default).
[[nodiscard]] int thread_cap();

/// Runs body(0..count-1). If any item throws, the exception of the lowest failing
/// index is rethrown after all items finish.
void for_each_index(std::size_t count, const std::function<void(std::size_t)>& body, Execution exec);

template <typename Result, typename Fn>
[[nodiscard]] std::vector<Result> sweep(std::size_t count, Fn&& fn, Execution exec) {
    std::vector<Result> out(count);
    for_each_index(count, [&](std::size_t j) { out[j] = fn(j); }, exec);
    return out;
}

}  // namespace buoyancy
