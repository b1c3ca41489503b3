#pragma once

#include <cstdlib>
#include <exception>

#ifdef GSEED_HAVE_OPENMP
#include <omp.h>
#endif

namespace gseed {

/* Worker budget: GSEED_THREADS when set (clamped to >= 1), otherwise the
 * OpenMP default, otherwise 1. */
inline int thread_budget() {
    if (const char* env = std::getenv("GSEED_THREADS")) {
        int v = std::atoi(env);
        if (v >= 1) return v;
        return 1;
    }
#ifdef GSEED_HAVE_OPENMP
    return omp_get_max_threads();
#else
    return 1;
#endif
}

/* Index of the worker running the current iteration (0 under serial). Used
 * by window kernels to pick a per-worker scratch object (e.g. a private
 * coefficient stream), so no shared state is mutated concurrently. */
inline int current_worker() {
#ifdef GSEED_HAVE_OPENMP
    return omp_get_thread_num();
#else
    return 0;
#endif
}

/* Maps fn over [begin, end). Every iteration must write only its own output
 * slot; precision is pinned per variable, so the schedule cannot perturb
 * results and the parallel run agrees with run_window_serial bit for bit
 * (tests and the window benchmark compare the two). Exceptions are caught
 * inside the region and the first one is rethrown after the join.
 */
template <typename Fn>
void run_window(long begin, long end, Fn&& fn) {
#ifdef GSEED_HAVE_OPENMP
    if (thread_budget() > 1 && end - begin > 1) {
        std::exception_ptr first;
#pragma omp parallel for schedule(dynamic) num_threads(thread_budget())
        for (long i = begin; i < end; ++i) {
            try {
                fn(i);
            } catch (...) {
#pragma omp critical(gseed_run_window_error)
                {
                    if (!first) first = std::current_exception();
                }
            }
        }
        if (first) std::rethrow_exception(first);
        return;
    }
#endif
    for (long i = begin; i < end; ++i) fn(i);
}

/* The reference implementation the parallel path is checked against. */
template <typename Fn>
void run_window_serial(long begin, long end, Fn&& fn) {
    for (long i = begin; i < end; ++i) fn(i);
}

}  // namespace gseed
