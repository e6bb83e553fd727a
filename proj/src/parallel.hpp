#ifndef QUATALG_SRC_PARALLEL_HPP
#define QUATALG_SRC_PARALLEL_HPP

#include <cstddef>
#include <exception>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace quatalg::detail {

/// Runs body(i) for i in [0, n) across OpenMP threads. The exception thrown
/// by the lowest failing index is rethrown on the calling thread, so the
/// error reported does not depend on the schedule.
template <class Body>
void parallel_for(std::size_t n, Body&& body) {
  std::exception_ptr first_error;
  std::size_t first_index = n;
  const long count = static_cast<long>(n);
#pragma omp parallel for schedule(dynamic, 1)
  for (long i = 0; i < count; ++i) {
    try {
      body(static_cast<std::size_t>(i));
    } catch (...) {
#pragma omp critical(quatalg_parallel_error)
      {
        if (static_cast<std::size_t>(i) < first_index) {
          first_index = static_cast<std::size_t>(i);
          first_error = std::current_exception();
        }
      }
    }
  }
  if (first_error) std::rethrow_exception(first_error);
}

}  // namespace quatalg::detail

#endif
