#pragma once

#include <cstddef>

namespace pleatbend {

/// Effective worker count: min(OpenMP max threads, PLEATBEND_THREADS).
/// Returns 1 when built without OpenMP.
int max_threads();

/// Serial reference loop: f(i) for i in [0, n).
template <typename F>
void serial_for(std::size_t n, F&& f) {
    for (std::size_t i = 0; i < n; ++i) f(i);
}

namespace detail {
void run_indexed(std::size_t n, void (*thunk)(void*, std::size_t), void* ctx);
}

/// Data-parallel loop over independent indices.  Results must be written
/// to per-index slots so the output is identical to serial_for.
template <typename F>
void parallel_for(std::size_t n, F&& f) {
    auto thunk = [](void* ctx, std::size_t i) { (*static_cast<F*>(ctx))(i); };
    detail::run_indexed(n, thunk, &f);
}

}  // namespace pleatbend
