#pragma once

#include <cstddef>
#include <exception>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace passband {

// Execution policy for the grid loops in extend / sweep / verify.  The
// serial path is the reference implementation; the parallel path must be
// byte-identical because every iteration writes only its own slot and all
// reductions happen serially afterwards.
enum class Exec { serial, parallel };

inline int max_threads() {
#ifdef _OPENMP
    return omp_get_max_threads();
#else
    return 1;
#endif
}

// Caps the OpenMP worker count (no-op without OpenMP).
inline void set_threads(int n) {
#ifdef _OPENMP
    if (n > 0) omp_set_num_threads(n);
#else
    (void)n;
#endif
}

// Runs body(i) for i in [0, n).  Iterations must be independent.  Under
// Exec::parallel the first exception thrown by any iteration is rethrown
// on the calling thread once the loop has drained.
template <class Body>
void for_each_index(std::size_t n, Exec exec, const Body& body) {
    if (exec == Exec::serial || n < 2) {
        for (std::size_t i = 0; i < n; ++i) body(i);
        return;
    }
    std::exception_ptr first_error = nullptr;
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
    for (long long i = 0; i < static_cast<long long>(n); ++i) {
        try {
            body(static_cast<std::size_t>(i));
        } catch (...) {
            bool store = false;
#ifdef _OPENMP
#pragma omp critical(passband_for_each_index)
#endif
            {
                if (!first_error) {
                    first_error = std::current_exception();
                    store = true;
                }
            }
            (void)store;
        }
    }
    if (first_error) std::rethrow_exception(first_error);
}

} // namespace passband
