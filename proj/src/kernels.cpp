#include "willmore/kernels.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace willmore::kernels {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

template <class BlockOp, class Combine>
double blocked_reduce(std::size_t n, double identity, BlockOp block_op,
                      Combine combine) {
  if (n == 0) return identity;
  const std::size_t nblocks = (n + block_size - 1) / block_size;
  std::vector<double> partial(nblocks);
#pragma omp parallel for schedule(static)
  for (long long b = 0; b < static_cast<long long>(nblocks); ++b) {
    const std::size_t lo = static_cast<std::size_t>(b) * block_size;
    const std::size_t hi = std::min(lo + block_size, n);
    partial[static_cast<std::size_t>(b)] = block_op(lo, hi);
  }
  double acc = identity;
  for (std::size_t b = 0; b < nblocks; ++b) acc = combine(acc, partial[b]);
  return acc;
}

}  // namespace

double sum_serial(std::span<const double> x) {
  // Same fixed block structure as the parallel version so both agree bitwise.
  double acc = 0.0;
  for (std::size_t lo = 0; lo < x.size(); lo += block_size) {
    const std::size_t hi = std::min(lo + block_size, x.size());
    double s = 0.0;
    for (std::size_t i = lo; i < hi; ++i) s += x[i];
    acc += s;
  }
  return acc;
}

double sum(std::span<const double> x) {
  return blocked_reduce(
      x.size(), 0.0,
      [&](std::size_t lo, std::size_t hi) {
        double s = 0.0;
        for (std::size_t i = lo; i < hi; ++i) s += x[i];
        return s;
      },
      [](double a, double b) { return a + b; });
}

double min_serial(std::span<const double> x) {
  double acc = kInf;
  for (double v : x) acc = std::min(acc, v);
  return acc;
}

double min(std::span<const double> x) {
  return blocked_reduce(
      x.size(), kInf,
      [&](std::size_t lo, std::size_t hi) {
        double m = kInf;
        for (std::size_t i = lo; i < hi; ++i) m = std::min(m, x[i]);
        return m;
      },
      [](double a, double b) { return std::min(a, b); });
}

double max_serial(std::span<const double> x) {
  double acc = -kInf;
  for (double v : x) acc = std::max(acc, v);
  return acc;
}

double max(std::span<const double> x) {
  return blocked_reduce(
      x.size(), -kInf,
      [&](std::size_t lo, std::size_t hi) {
        double m = -kInf;
        for (std::size_t i = lo; i < hi; ++i) m = std::max(m, x[i]);
        return m;
      },
      [](double a, double b) { return std::max(a, b); });
}

namespace {

double lse_given_shift(std::span<const double> logs,
                       std::span<const double> weights, double shift) {
  if (shift == -kInf) return -kInf;  // all terms vanish
  const std::size_t n = logs.size();
  const double s = blocked_reduce(
      n, 0.0,
      [&](std::size_t lo, std::size_t hi) {
        double acc = 0.0;
        for (std::size_t i = lo; i < hi; ++i) {
          if (weights[i] == 0.0 || logs[i] == -kInf) continue;
          acc += weights[i] * std::exp(logs[i] - shift);
        }
        return acc;
      },
      [](double a, double b) { return a + b; });
  return shift + std::log(s);
}

double lse_given_shift_serial(std::span<const double> logs,
                              std::span<const double> weights, double shift) {
  if (shift == -kInf) return -kInf;
  double acc = 0.0;
  for (std::size_t lo = 0; lo < logs.size(); lo += block_size) {
    const std::size_t hi = std::min(lo + block_size, logs.size());
    double s = 0.0;
    for (std::size_t i = lo; i < hi; ++i) {
      if (weights[i] == 0.0 || logs[i] == -kInf) continue;
      s += weights[i] * std::exp(logs[i] - shift);
    }
    acc += s;
  }
  return shift + std::log(acc);
}

}  // namespace

double log_sum_exp_weighted(std::span<const double> logs,
                            std::span<const double> weights) {
  return lse_given_shift(logs, weights, max(logs));
}

double log_sum_exp_weighted_serial(std::span<const double> logs,
                                   std::span<const double> weights) {
  return lse_given_shift_serial(logs, weights, max_serial(logs));
}

}  // namespace willmore::kernels
