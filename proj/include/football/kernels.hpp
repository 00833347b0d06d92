#pragma once

#include <cstdint>
#include <limits>
#include <numeric>
#include <vector>

// Grid kernels shared by the tessellator and the verification sweeps.  Every
// kernel has a serial and an OpenMP path selected by Exec; both produce
// bit-identical results (parallel work writes disjoint slots or per-row
// partials that are reduced in a fixed order), so outputs do not depend on
// the thread count.  Functions passed in must not throw.

namespace football {

enum class Exec { serial, parallel };

namespace kernels {

// f(i) for every i in [0, n), in parallel when requested.
template <class F>
void index_for(Exec exec, std::int64_t n, const F& f) {
#ifdef _OPENMP
  if (exec == Exec::parallel) {
#pragma omp parallel for schedule(static)
    for (std::int64_t i = 0; i < n; ++i) f(i);
    return;
  }
#else
  (void)exec;
#endif
  for (std::int64_t i = 0; i < n; ++i) f(i);
}

// Sum of f(i, j) over the grid.  Each row is accumulated left to right into
// its own partial and the partials are added in row order, so the result is
// identical for both execution modes.
template <class F>
double grid_sum(Exec exec, std::int64_t rows, std::int64_t cols, const F& f) {
  std::vector<double> partial(static_cast<std::size_t>(rows), 0.0);
  index_for(exec, rows, [&](std::int64_t i) {
    double s = 0.0;
    for (std::int64_t j = 0; j < cols; ++j) s += f(i, j);
    partial[static_cast<std::size_t>(i)] = s;
  });
  return std::accumulate(partial.begin(), partial.end(), 0.0);
}

// Maximum of f(i, j) over the grid.
template <class F>
double grid_max(Exec exec, std::int64_t rows, std::int64_t cols, const F& f) {
  std::vector<double> partial(static_cast<std::size_t>(rows),
                              -std::numeric_limits<double>::infinity());
  index_for(exec, rows, [&](std::int64_t i) {
    double m = -std::numeric_limits<double>::infinity();
    for (std::int64_t j = 0; j < cols; ++j) {
      const double v = f(i, j);
      if (v > m) m = v;
    }
    partial[static_cast<std::size_t>(i)] = m;
  });
  double m = -std::numeric_limits<double>::infinity();
  for (double v : partial)
    if (v > m) m = v;
  return m;
}

}  // namespace kernels
}  // namespace football
