// Execution policy for the sweep kernels. Every sweep has a serial reference
// path and an OpenMP path over the same per-index function; results must be
// bit-identical because each index writes its own slot and reductions happen
// serially afterwards. THETA_GAUSS_THREADS overrides the team size (consulted
// per sweep, so tests can flip it at runtime).

#pragma once

#include <cstdint>
#include <cstdlib>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace theta_gauss {

enum class Exec { Serial, Parallel };

inline int resolve_threads() {
#ifdef _OPENMP
  if (const char* env = std::getenv("THETA_GAUSS_THREADS")) {
    int n = std::atoi(env);
    if (n > 0) return n;
  }
  return omp_get_max_threads();
#else
  return 1;
#endif
}

template <class F>
void parallel_for(std::int64_t n, Exec exec, F&& body) {
  if (exec == Exec::Serial) {
    for (std::int64_t i = 0; i < n; ++i) body(i);
    return;
  }
#ifdef _OPENMP
  const int threads = resolve_threads();
#pragma omp parallel for schedule(static) num_threads(threads)
  for (std::int64_t i = 0; i < n; ++i) body(i);
#else
  for (std::int64_t i = 0; i < n; ++i) body(i);
#endif
}

}  // namespace theta_gauss
