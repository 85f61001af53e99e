#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace willmore::kernels {

// Reduction kernels used by the quadrature and margin-scan loops.
//
// Each kernel comes in two flavours: a *_serial reference implementation and
// the default blocked version whose inner blocks may run under OpenMP. The
// blocked versions chunk the input into fixed-size blocks (independent of the
// thread count) and combine the per-block partials in block order, so the
// result is bitwise identical to itself across runs and across thread counts,
// and bitwise identical to the serial reference. Tests rely on that.

inline constexpr std::size_t block_size = 4096;

double sum_serial(std::span<const double> x);
double sum(std::span<const double> x);

double min_serial(std::span<const double> x);  // +inf on empty input
double min(std::span<const double> x);

double max_serial(std::span<const double> x);  // -inf on empty input
double max(std::span<const double> x);

// log(sum_i w_i * exp(l_i)) with max-shifted accumulation. Terms with
// l_i == -inf or w_i == 0 contribute nothing. Weights must be >= 0.
double log_sum_exp_weighted_serial(std::span<const double> logs,
                                   std::span<const double> weights);
double log_sum_exp_weighted(std::span<const double> logs,
                            std::span<const double> weights);

}  // namespace willmore::kernels
