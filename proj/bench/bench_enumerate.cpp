// Serial reference against the OpenMP search on the same (n, g) instances.
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <omp.h>

#include "spx/enumerate.hpp"

namespace {

double run_ms(const spx::SearchConfig& cfg, spx::ExtremalResult& out) {
  const auto start = std::chrono::steady_clock::now();
  out = spx::extremal_search(cfg);
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
}

}  // namespace

int main(int argc, char** argv) {
  const int max_n = argc > 1 ? std::atoi(argv[1]) : 11;
  const int threads = argc > 2 ? std::atoi(argv[2]) : omp_get_max_threads();
  std::printf("%-4s %-3s %-8s %-12s %-12s %-12s %s\n", "n", "g", "classes", "serial_ms",
              "parallel_ms", "speedup", "same");
  bool all_same = true;
  for (int g : {5, 6}) {
    for (int n = 8; n <= max_n; ++n) {
      spx::SearchConfig cfg{n, g, spx::SearchMode::max_and_enumerate, 0,
                            spx::Scope::two_connected, true, 0};
      spx::ExtremalResult serial, parallel;
      const double t0 = run_ms(cfg, serial);
      cfg.parallel_width = threads;
      const double t1 = run_ms(cfg, parallel);
      const bool same = serial.max_edges == parallel.max_edges && serial.extremal == parallel.extremal;
      all_same = all_same && same;
      std::printf("%-4d %-3d %-8zu %-12.2f %-12.2f %-12.2f %s\n", n, g, serial.extremal.size(), t0,
                  t1, t0 / t1, same ? "yes" : "NO");
    }
  }
  std::printf("threads=%d\n", threads);
  return all_same ? 0 : 1;
}
