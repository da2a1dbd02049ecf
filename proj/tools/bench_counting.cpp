// Compares the OpenMP transfer kernels against the serial reference
// implementation on one preset and reports timings and the speedup.
// Usage: bench_counting [preset] [n_max] [repeats]

#include <cstdlib>
#include <iostream>
#include <string>

#include "cogrowth/counting.hpp"
#include "cogrowth/presets.hpp"

#ifdef _OPENMP
#include <omp.h>
#else
#include <chrono>
#endif

namespace {

double now_seconds() {
#ifdef _OPENMP
  return omp_get_wtime();
#else
  return std::chrono::duration<double>(
             std::chrono::steady_clock::now().time_since_epoch())
      .count();
#endif
}

}  // namespace

int main(int argc, char **argv) {
  const std::string preset = argc > 1 ? argv[1] : "sl2z";
  const int n_max = argc > 2 ? std::atoi(argv[2]) : 24;
  const int repeats = argc > 3 ? std::atoi(argv[3]) : 3;
  if (!cogrowth::is_preset(preset)) {
    std::cerr << "unknown preset: " << preset << "\n";
    return 2;
  }
  const cogrowth::MarkedGroup g = cogrowth::load_preset(preset);

#ifdef _OPENMP
  std::cout << "openmp threads: " << omp_get_max_threads() << "\n";
#else
  std::cout << "built without openmp: both runs are serial\n";
#endif
  std::cout << "preset " << preset << ", n_max " << n_max << ", repeats " << repeats << "\n";

  double best_serial = 0.0, best_parallel = 0.0;
  cogrowth::CountTable serial_table, parallel_table;
  for (int rep = 0; rep < repeats; ++rep) {
    double t0 = now_seconds();
    serial_table = cogrowth::serial::count_table(g, n_max);
    const double serial_s = now_seconds() - t0;
    t0 = now_seconds();
    parallel_table = cogrowth::count_table(g, n_max);
    const double parallel_s = now_seconds() - t0;
    if (rep == 0 || serial_s < best_serial) best_serial = serial_s;
    if (rep == 0 || parallel_s < best_parallel) best_parallel = parallel_s;
    std::cout << "  run " << rep + 1 << ": serial " << serial_s << " s, parallel "
              << parallel_s << " s\n";
  }
  if (serial_table.gamma != parallel_table.gamma ||
      serial_table.walk != parallel_table.walk) {
    std::cerr << "MISMATCH between serial and parallel results\n";
    return 1;
  }
  std::cout << "best: serial " << best_serial << " s, parallel " << best_parallel
            << " s, speedup x" << (best_parallel > 0 ? best_serial / best_parallel : 0.0)
            << "\n";
  std::cout << "results identical across implementations\n";
  return 0;
}
