#ifndef QHT_PARALLEL_HPP
#define QHT_PARALLEL_HPP

#include <cstddef>
#include <exception>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace qht {

// Runs fn(i) for i in [0, n). Iterations must be independent; each iteration
// writes only to its own output slot, so results are identical for any
// thread count. Reductions over the slots are done serially by the caller,
// in index order, to keep floating-point sums bit-stable. An exception
// escaping an iteration is captured and rethrown after the loop (lowest
// index wins, so the surfaced error is thread-count independent too).
template <typename Fn>
void parallel_for(std::ptrdiff_t n, Fn&& fn) {
#ifdef _OPENMP
  std::vector<std::exception_ptr> errors(static_cast<std::size_t>(n > 0 ? n : 0));
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    try {
      fn(static_cast<std::size_t>(i));
    } catch (...) {
      errors[static_cast<std::size_t>(i)] = std::current_exception();
    }
  }
  for (const std::exception_ptr& err : errors) {
    if (err) std::rethrow_exception(err);
  }
#else
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    fn(static_cast<std::size_t>(i));
  }
#endif
}

inline int max_threads() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

inline void set_threads(int n) {
#ifdef _OPENMP
  omp_set_num_threads(n);
#else
  (void)n;
#endif
}

}  // namespace qht

#endif  // QHT_PARALLEL_HPP
