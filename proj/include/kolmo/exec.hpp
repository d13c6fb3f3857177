#pragma once

#include <cstddef>
#include <vector>

namespace kolmo {

// Serial is the reference path; Parallel runs the same per-index work under OpenMP.
// Both write results by index, so reductions over the output are identical.
enum class Exec { Serial, Parallel };

template <class F>
auto map_indices(std::size_t n, Exec exec, F&& f) -> std::vector<decltype(f(std::size_t{}))> {
  std::vector<decltype(f(std::size_t{}))> out(n);
  const long count = static_cast<long>(n);
  if (exec == Exec::Parallel) {
#pragma omp parallel for schedule(dynamic, 4)
    for (long i = 0; i < count; ++i) out[static_cast<std::size_t>(i)] = f(static_cast<std::size_t>(i));
  } else {
    for (long i = 0; i < count; ++i) out[static_cast<std::size_t>(i)] = f(static_cast<std::size_t>(i));
  }
  return out;
}

}  // namespace kolmo
