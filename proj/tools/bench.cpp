// Timing comparison of the serial reference loops against the OpenMP kernels.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "ameforge/search.hpp"
#include "ameforge/uniformity.hpp"

using namespace ameforge;
using clock_type = std::chrono::steady_clock;

static double seconds_since(clock_type::time_point start) {
  return std::chrono::duration<double>(clock_type::now() - start).count();
}

int main() {
#ifdef _OPENMP
  std::printf("OpenMP enabled, max threads %d\n\n", omp_get_max_threads());
#else
  std::printf("OpenMP disabled; both columns run the same serial code\n\n");
#endif
  std::printf("%-34s %10s %10s %8s\n", "kernel", "serial[s]", "parallel[s]", "speedup");

  {
    rng_engine rng(1);
    PureState state = sample_haar_state(10, 2, rng);
    auto t0 = clock_type::now();
    auto serial = balanced_purities_serial(state);
    double ts = seconds_since(t0);
    t0 = clock_type::now();
    auto parallel = balanced_purities(state);
    double tp = seconds_since(t0);
    double diff = 0.0;
    for (std::size_t i = 0; i < serial.size(); ++i)
      diff = std::max(diff, std::abs(serial[i] - parallel[i]));
    std::printf("%-34s %10.3f %10.3f %8.2f   (max diff %.1e)\n",
                "balanced purities, 10 qubits", ts, tp, ts / tp, diff);
  }

  {
    rng_engine rng(2);
    PureState state = sample_haar_state(6, 3, rng);
    auto t0 = clock_type::now();
    auto serial = reduction_deviations_serial(state, 3);
    double ts = seconds_since(t0);
    t0 = clock_type::now();
    auto parallel = reduction_deviations(state, 3);
    double tp = seconds_since(t0);
    double diff = 0.0;
    for (std::size_t i = 0; i < serial.size(); ++i)
      diff = std::max(diff, std::abs(serial[i] - parallel[i]));
    std::printf("%-34s %10.3f %10.3f %8.2f   (max diff %.1e)\n",
                "reduction deviations, 6 qutrits", ts, tp, ts / tp, diff);
  }

  {
    auto t0 = clock_type::now();
    auto serial = average_page_entropy_serial(10, 200, 7);
    double ts = seconds_since(t0);
    t0 = clock_type::now();
    auto parallel = average_page_entropy(10, 200, 7);
    double tp = seconds_since(t0);
    std::printf("%-34s %10.3f %10.3f %8.2f   (mean diff %.1e)\n",
                "page entropy, 10 qubits x 200", ts, tp, ts / tp,
                std::abs(serial.first - parallel.first));
  }

  {
    AnnealConfig config;
    config.sweeps = 80;
    config.restarts = 4;
    auto t0 = clock_type::now();
    SearchResult serial = minimize_potential_serial(4, 3, config);
    double ts = seconds_since(t0);
    t0 = clock_type::now();
    SearchResult parallel = minimize_potential(4, 3, config);
    double tp = seconds_since(t0);
    std::printf("%-34s %10.3f %10.3f %8.2f   (value diff %.1e)\n",
                "anneal 4 qutrits, 4 restarts", ts, tp, ts / tp,
                std::abs(serial.best_value - parallel.best_value));
  }

  return 0;
}
