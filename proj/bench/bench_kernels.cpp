// Compares the serial reference kernels against the blocked (OpenMP) ones on
// quadrature-sized and oversized inputs, and times a representative sweep.
// The blocked kernels must agree bitwise with the serial references; the
// benchmark asserts that while it measures.

#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <string>
#include <vector>

#include "willmore/kernels.hpp"
#include "willmore/runner.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace {

using clock_type = std::chrono::steady_clock;

double seconds_since(clock_type::time_point t0) {
  return std::chrono::duration<double>(clock_type::now() - t0).count();
}

std::vector<double> fill(std::size_t n) {
  std::vector<double> v(n);
  std::uint64_t s = 0x9e3779b97f4a7c15ULL;
  for (auto& x : v) {
    s = s * 6364136223846793005ULL + 1442695040888963407ULL;
    x = static_cast<double>(s >> 11) / 9007199254740992.0;
  }
  return v;
}

template <class F>
double time_best_of(int reps, F&& f) {
  double best = 1e300;
  for (int i = 0; i < reps; ++i) {
    const auto t0 = clock_type::now();
    f();
    best = std::min(best, seconds_since(t0));
  }
  return best;
}

}  // namespace

int main() {
#ifdef _OPENMP
  std::printf("OpenMP enabled, max threads %d\n", omp_get_max_threads());
#else
  std::printf("OpenMP disabled (serial build)\n");
#endif

  for (std::size_t n : {50001UL, 1000001UL, 8000001UL}) {
    const auto v = fill(n);
    std::vector<double> logs(n), weights(n, 1e-3);
    for (std::size_t i = 0; i < n; ++i) logs[i] = 5.0 * v[i];

    volatile double sink = 0.0;
    const double t_sum_serial =
        time_best_of(5, [&] { sink = willmore::kernels::sum_serial(v); });
    const double t_sum =
        time_best_of(5, [&] { sink = willmore::kernels::sum(v); });
    const bool sum_same =
        willmore::kernels::sum(v) == willmore::kernels::sum_serial(v);

    const double t_lse_serial = time_best_of(5, [&] {
      sink = willmore::kernels::log_sum_exp_weighted_serial(logs, weights);
    });
    const double t_lse = time_best_of(5, [&] {
      sink = willmore::kernels::log_sum_exp_weighted(logs, weights);
    });
    const bool lse_same =
        willmore::kernels::log_sum_exp_weighted(logs, weights) ==
        willmore::kernels::log_sum_exp_weighted_serial(logs, weights);
    (void)sink;

    std::printf(
        "n=%8zu  sum: serial %8.3f ms  blocked %8.3f ms  speedup %5.2fx  "
        "bitwise %s\n",
        n, 1e3 * t_sum_serial, 1e3 * t_sum, t_sum_serial / t_sum,
        sum_same ? "ok" : "MISMATCH");
    std::printf(
        "            lse: serial %8.3f ms  blocked %8.3f ms  speedup %5.2fx  "
        "bitwise %s\n",
        1e3 * t_lse_serial, 1e3 * t_lse, t_lse_serial / t_lse,
        lse_same ? "ok" : "MISMATCH");
    if (!sum_same || !lse_same) return 1;
  }

  // end-to-end sweep (fans out over configurations when OpenMP is on)
  const std::string cfg = R"({"command":"sweep","theorem":"thm11"})";
  const double t_sweep =
      time_best_of(3, [&] { (void)willmore::run_command("sweep", cfg); });
  std::printf("sweep (3x3 equality grid): %8.3f ms\n", 1e3 * t_sweep);
  return 0;
}
