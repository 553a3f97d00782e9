#pragma once

#include <cstddef>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace matquot::par {

// Worker count for the OpenMP kernels; 0 means "library default".
int jobs();
void set_jobs(int n);

enum class Policy { kSerial, kParallel };

// Runs body(i) for i in [0, count). The parallel path writes results into
// index-addressed slots only, so output order is deterministic regardless of
// scheduling.
template <class F>
void parallel_for(std::size_t count, F&& body, Policy policy = Policy::kParallel) {
#ifdef _OPENMP
  if (policy == Policy::kParallel) {
    const int nthreads = jobs();
#pragma omp parallel for schedule(dynamic, 16) num_threads(nthreads > 0 ? nthreads : omp_get_max_threads())
    for (long long i = 0; i < static_cast<long long>(count); ++i) {
      body(static_cast<std::size_t>(i));
    }
    return;
  }
#else
  (void)policy;
#endif
  for (std::size_t i = 0; i < count; ++i) body(i);
}

}  // namespace matquot::par
