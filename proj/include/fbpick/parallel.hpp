#pragma once

#include <cstddef>
#include <exception>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace fbpick {

// Every parallel kernel in this project also has a serial path; the two must
// produce identical bytes. f(i) may only write to state owned by index i.
enum class ExecMode { Serial, Parallel };

inline int max_threads() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

inline void set_threads(int n) {
#ifdef _OPENMP
  if (n > 0) omp_set_num_threads(n);
#else
  (void)n;
#endif
}

template <class F>
void for_each_index(std::size_t n, ExecMode mode, F&& f) {
#ifdef _OPENMP
  if (mode == ExecMode::Parallel && n > 1) {
    std::vector<std::exception_ptr> errs(n);
#pragma omp parallel for schedule(static)
    for (long long i = 0; i < (long long)n; ++i) {
      try {
        f(std::size_t(i));
      } catch (...) {
        errs[std::size_t(i)] = std::current_exception();
      }
    }
    for (auto& e : errs)
      if (e) std::rethrow_exception(e);
    return;
  }
#endif
  (void)mode;
  for (std::size_t i = 0; i < n; ++i) f(i);
}

}  // namespace fbpick
