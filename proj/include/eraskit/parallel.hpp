#pragma once

#include <cstddef>
#include <cstdint>

#if defined(_OPENMP)
#include <omp.h>
#endif

namespace eraskit {

/// Corpus-level kernels come in two flavours: a plain serial loop kept as the
/// reference implementation, and an OpenMP loop over documents. Results must
/// be identical; tests compare the two and the bench tool times them.
enum class Execution { Serial, Parallel };

/// Runs f(0) .. f(n-1). Parallel ordering is unspecified, so callers must
/// write results into per-index slots and aggregate afterwards.
template <typename F>
void for_each_index(std::size_t n, Execution exec, F&& f) {
#if defined(_OPENMP)
  if (exec == Execution::Parallel) {
    #pragma omp parallel for schedule(dynamic)
    for (std::int64_t i = 0; i < static_cast<std::int64_t>(n); ++i) {
      f(static_cast<std::size_t>(i));
    }
    return;
  }
#else
  (void)exec;
#endif
  for (std::size_t i = 0; i < n; ++i) f(i);
}

}  // namespace eraskit
