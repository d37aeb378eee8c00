#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace mfc {

/// Selects the serial reference path or the OpenMP kernel of a sweep. Both
/// return identical results in identical order.
enum class Exec { serial, parallel };

/// Sets the worker count used by Exec::parallel kernels; 0 keeps the default.
inline void set_worker_count(int jobs) {
#ifdef _OPENMP
  if (jobs > 0) omp_set_num_threads(jobs);
#else
  (void)jobs;
#endif
}

inline int worker_count() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

/// Evaluates f(i) for i in [0, count) and returns the results in index order.
template <class T, class F>
std::vector<T> ordered_map(std::size_t count, Exec exec, F&& f) {
  std::vector<T> out(count);
  if (exec == Exec::serial) {
    for (std::size_t i = 0; i < count; ++i) out[i] = f(i);
    return out;
  }
  const auto n = static_cast<long long>(count);
#pragma omp parallel for schedule(dynamic, 1)
  for (long long i = 0; i < n; ++i) out[static_cast<std::size_t>(i)] = f(static_cast<std::size_t>(i));
  return out;
}

/// Smallest i in [0, count) with pred(i), or nullopt. The parallel kernel
/// keeps scanning past a hit only for indices below the current best.
template <class F>
std::optional<std::size_t> first_index(std::size_t count, Exec exec, F&& pred) {
  if (exec == Exec::serial) {
    for (std::size_t i = 0; i < count; ++i) {
      if (pred(i)) return i;
    }
    return std::nullopt;
  }
  const auto n = static_cast<long long>(count);
  long long best = n;
#pragma omp parallel for schedule(dynamic, 16)
  for (long long i = 0; i < n; ++i) {
    long long seen;
#pragma omp atomic read
    seen = best;
    if (i >= seen) continue;
    if (pred(static_cast<std::size_t>(i))) {
#pragma omp critical(mfc_first_index)
      if (i < best) best = i;
    }
  }
  if (best == n) return std::nullopt;
  return static_cast<std::size_t>(best);
}

}  // namespace mfc
