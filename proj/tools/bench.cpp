// Benchmarks the parallel extremal-search kernel against the serial
// reference and fails if their reports ever differ.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "rmatch/report_json.hpp"
#include "rmatch/search.hpp"

namespace {

double time_of(const std::function<rmatch::SearchReport()>& fn,
               rmatch::SearchReport& out) {
  auto start = std::chrono::steady_clock::now();
  out = fn();
  return std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                       start)
      .count();
}

}  // namespace

int main(int argc, char** argv) {
  int r = 2;
  int n_lo = 12, n_hi = 15;
  int threads = 0;
  for (int i = 1; i + 1 < argc; i += 2) {
    std::string flag = argv[i];
    int value = std::atoi(argv[i + 1]);
    if (flag == "--r")
      r = value;
    else if (flag == "--n-min")
      n_lo = value;
    else if (flag == "--n-max")
      n_hi = value;
    else if (flag == "--threads")
      threads = value;
    else {
      std::fprintf(stderr, "usage: rmatch-bench [--r R] [--n-min N] [--n-max N] [--threads T]\n");
      return 1;
    }
  }
#ifdef _OPENMP
  if (threads <= 0) threads = omp_get_max_threads();
#else
  if (threads <= 0) threads = 1;
#endif

  std::printf("%4s %4s %9s %12s %14s %9s\n", "n", "r", "classes",
              "serial (s)", "parallel (s)", "speedup");
  for (int n = n_lo; n <= n_hi; ++n) {
    rmatch::SearchReport serial, parallel;
    double ts = time_of([&] { return rmatch::search_extremal_serial(r, n); },
                        serial);
    double tp = time_of(
        [&] {
          return rmatch::search_extremal(r, n, rmatch::SearchOptions{threads});
        },
        parallel);
    if (rmatch::to_json(serial) != rmatch::to_json(parallel)) {
      std::fprintf(stderr, "report mismatch at n=%d r=%d\n", n, r);
      return 2;
    }
    std::printf("%4d %4d %9llu %12.4f %14.4f %8.2fx\n", n, r,
                static_cast<unsigned long long>(serial.trees_examined), ts, tp,
                tp > 0 ? ts / tp : 0.0);
  }
  std::printf("parallel kernel (%d threads) matched the serial reference on every row\n",
              threads);
  return 0;
}
