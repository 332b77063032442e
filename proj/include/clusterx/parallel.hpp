// Work distribution for the sweep kernels. Every sweep comes in a parallel
// flavor (OpenMP when available) and a serial flavor used as the reference
// in tests and benchmarks. Results are written to index-addressed slots, so
// outputs are byte-identical for any thread count.
#pragma once

#include <cstdlib>
#include <functional>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace clusterx::par {

enum class Mode { serial, parallel };

inline int max_threads() {
#ifdef _OPENMP
    if (const char* env = std::getenv("CLUSTERX_THREADS")) {
        int n = std::atoi(env);
        if (n > 0) return n;
    }
    return omp_get_max_threads();
#else
    return 1;
#endif
}

template <typename Body>
void parallel_for(std::size_t n, Mode mode, const Body& body) {
    if (mode == Mode::serial) {
        for (std::size_t i = 0; i < n; ++i) body(i);
        return;
    }
#ifdef _OPENMP
    const int nt = max_threads();
#pragma omp parallel for schedule(dynamic, 1) num_threads(nt)
    for (long long i = 0; i < static_cast<long long>(n); ++i)
        body(static_cast<std::size_t>(i));
#else
    for (std::size_t i = 0; i < n; ++i) body(i);
#endif
}

}  // namespace clusterx::par
