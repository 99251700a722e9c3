#pragma once

#include <cstdint>

namespace cloak {

// Every parallel kernel in this library has two paths: an OpenMP one and a
// serial reference. Outputs are bitwise identical because per-index work is
// pure and reductions are done serially over a pre-filled buffer.
enum class ExecMode { Serial, OpenMP };

inline ExecMode default_exec_mode() {
#ifdef _OPENMP
  return ExecMode::OpenMP;
#else
  return ExecMode::Serial;
#endif
}

template <class F>
void parallel_for(std::int64_t n, ExecMode mode, F&& fn) {
#ifdef _OPENMP
  if (mode == ExecMode::OpenMP) {
#pragma omp parallel for schedule(static)
    for (std::int64_t i = 0; i < n; ++i) fn(i);
    return;
  }
#else
  (void)mode;
#endif
  for (std::int64_t i = 0; i < n; ++i) fn(i);
}

}  // namespace cloak
