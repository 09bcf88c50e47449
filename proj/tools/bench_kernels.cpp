// Compares the OpenMP kernels against their serial references: the simplex
// lattice scan and the multistart search. Run with OMP_NUM_THREADS to pick
// the thread count.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "copangle/random.hpp"
#include "copangle/search.hpp"
#include "copangle/simplex_oracle.hpp"

using namespace copangle;

namespace {

double seconds_of(const std::function<void()>& work) {
  const auto begin = std::chrono::steady_clock::now();
  work();
  return std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                       begin)
      .count();
}

void bench_oracle(int order, long resolution) {
  const SymMatrix a = random_unit_symmetric(order, Seed{99});
  SimplexScan serial, parallel;
  const double t_serial =
      seconds_of([&] { serial = simplex_oracle_serial(a, resolution); });
  const double t_parallel =
      seconds_of([&] { parallel = simplex_oracle(a, resolution); });
  const bool identical = serial.min_value == parallel.min_value &&
                         serial.argmin == parallel.argmin;
  std::printf("oracle  n=%d res=%-6ld serial %8.4fs  parallel %8.4fs  x%.2f  %s\n",
              order, resolution, t_serial, t_parallel,
              t_serial / t_parallel, identical ? "identical" : "MISMATCH");
}

void bench_search(int order, int starts) {
  SearchConfig cfg;
  cfg.order = order;
  cfg.starts = starts;
  cfg.seed = Seed{7};
  double best = 0.0;
  const double t =
      seconds_of([&] { best = multistart_max_angle(cfg).best_angle; });
  std::printf("search  n=%d starts=%-3d %8.4fs  best angle %.9f\n", order,
              starts, t, best);
}

}  // namespace

int main(int argc, char** argv) {
  long resolution = argc > 1 ? std::stol(argv[1]) : 600;
#ifdef _OPENMP
  std::printf("threads: %d\n", omp_get_max_threads());
#else
  std::printf("threads: 1 (OpenMP disabled)\n");
#endif
  bench_oracle(3, resolution);
  bench_oracle(4, resolution / 4);
  bench_search(2, 16);
  bench_search(3, 16);
  return 0;
}
