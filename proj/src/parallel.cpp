#include "pleatbend/parallel.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace pleatbend {

int max_threads() {
#ifdef _OPENMP
    int n = omp_get_max_threads();
#else
    int n = 1;
#endif
    if (const char* cap = std::getenv("PLEATBEND_THREADS")) {
        try {
            int c = std::stoi(cap);
            if (c >= 1) n = std::min(n, c);
        } catch (...) {
            // ignore malformed values
        }
    }
    return std::max(1, n);
}

namespace detail {

void run_indexed(std::size_t n, void (*thunk)(void*, std::size_t), void* ctx) {
#ifdef _OPENMP
    int workers = max_threads();
    if (workers > 1 && n > 1) {
#pragma omp parallel for schedule(static) num_threads(workers)
        for (long long i = 0; i < static_cast<long long>(n); ++i)
            thunk(ctx, static_cast<std::size_t>(i));
        return;
    }
#endif
    for (std::size_t i = 0; i < n; ++i) thunk(ctx, i);
}

}  // namespace detail
}  // namespace pleatbend
