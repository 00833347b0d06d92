// Serial vs parallel timing for the grid kernels on their real workloads.
// Self-timed (best of several repetitions) so the comparison needs no
// external framework; both paths produce bit-identical values, which is
// asserted before timing.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <string>

#include "football/mesh.hpp"
#include "football/verify.hpp"

using namespace football;

namespace {

double g_sink = 0.0;  // defeats dead-code elimination

template <class F>
double best_of(int reps, const F& f) {
  double best = 1e300;
  for (int i = 0; i < reps; ++i) {
    const auto t0 = std::chrono::steady_clock::now();
    g_sink += f();
    const auto t1 = std::chrono::steady_clock::now();
    best = std::min(best, std::chrono::duration<double, std::milli>(t1 - t0).count());
  }
  return best;
}

void row(const char* name, double serial_ms, double parallel_ms) {
  std::printf("%-28s %10.2f ms %10.2f ms %8.2fx\n", name, serial_ms, parallel_ms,
              serial_ms / parallel_ms);
}

}  // namespace

int main(int argc, char** argv) {
  const int reps = argc > 1 ? std::atoi(argv[1]) : 3;
  const FootballParams p(0.5, 4);
  const BranchParams bp(2, 1.0);
  const GridSpec grid{512, 512, 1e-5};
  const GridSpec cover_grid{192, 192, 1e-5};
  const MeshConfig cfg{96, 192, true, 10.0};

  if (total_parametric_area(p, grid, Exec::serial) !=
      total_parametric_area(p, grid, Exec::parallel)) {
    std::fprintf(stderr, "serial and parallel areas disagree\n");
    return 1;
  }

  std::printf("%-28s %13s %13s %9s\n", "workload", "serial", "parallel", "speedup");

  row("parametric_area 512x512",
      best_of(reps, [&] { return total_parametric_area(p, grid, Exec::serial); }),
      best_of(reps, [&] { return total_parametric_area(p, grid, Exec::parallel); }));

  row("covering_check 192x192",
      best_of(reps, [&] { return covering_multiplicity_check(p, cover_grid, Exec::serial); }),
      best_of(reps, [&] { return covering_multiplicity_check(p, cover_grid, Exec::parallel); }));

  row("meridian_polyline 5e4",
      best_of(reps, [&] { return meridian_polyline_length(p, 50000, 0.0, Exec::serial); }),
      best_of(reps, [&] { return meridian_polyline_length(p, 50000, 0.0, Exec::parallel); }));

  row("tessellate 96x192",
      best_of(reps, [&] { return tessellate(p, cfg, Exec::serial).vertices.back().z; }),
      best_of(reps, [&] { return tessellate(p, cfg, Exec::parallel).vertices.back().z; }));

  row("tessellate_branched 96x192",
      best_of(reps, [&] { return tessellate_branched(bp, cfg, Exec::serial).vertices.back().z; }),
      best_of(reps,
              [&] { return tessellate_branched(bp, cfg, Exec::parallel).vertices.back().z; }));

  std::printf("(sink %.3g)\n", g_sink);
  return 0;
}
