#include "buoyancy/parallel.hpp"

#include <cstdlib>
#include <exception>
#include <string>

#include <omp.h>

namespace buoyancy {

int thread_cap() {
    if (const char* env = std::getenv("BUOYANCY_THREADS")) {
        try {
            const int cap = std::stoi(env);
            if (cap > 0) return cap;
        } catch (const std::exception&) {
            // unparsable values fall back to the default
        }
    }
    return omp_get_max_threads();
}

void for_each_index(std::size_t count, const std::function<void(std::size_t)>& body, Execution exec) {
    std::vector<std::exception_ptr> errors(count);
    const auto n = static_cast<std::ptrdiff_t>(count);
    if (exec == Execution::Parallel) {
#pragma omp parallel for schedule(dynamic, 1) num_threads(thread_cap())
        for (std::ptrdiff_t j = 0; j < n; ++j) {
            try {
                body(static_cast<std::size_t>(j));
            } catch (...) {
                errors[j] = std::current_exception();
            }
        }
    } else {
        for (std::ptrdiff_t j = 0; j < n; ++j) {
            try {
                body(static_cast<std::size_t>(j));
            } catch (...) {
                errors[j] = std::current_exception();
            }
        }
    }
    for (const auto& e : errors) {
        if (e) std::rethrow_exception(e);
    }
}

}  // namespace buoyancy
