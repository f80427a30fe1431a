#pragma once

#include <cstddef>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace gravmem {

// Number of worker threads used by parallel kernels and sweep drivers.
// 0 means "library default" (all hardware threads).
void set_worker_count(int n);
int worker_count();

// Dispatch f(i) for i in [0, n). Iterations must be independent; results are
// written by index so output order never depends on scheduling.
template <typename F>
void parallel_for(std::size_t n, F&& f) {
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) num_threads(worker_count())
    for (long long i = 0; i < static_cast<long long>(n); ++i) {
        f(static_cast<std::size_t>(i));
    }
#else
    for (std::size_t i = 0; i < n; ++i) {
        f(i);
    }
#endif
}

}  // namespace gravmem
