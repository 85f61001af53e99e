#include "willmore/numerics.hpp"

#include <cmath>
#include <limits>

namespace willmore {

double simpson_integral(const std::function<double(double)>& g, double t0,
                        double h, long intervals) {
  std::vector<double> contrib(static_cast<std::size_t>(intervals));
#pragma omp parallel for schedule(static)
  for (long k = 0; k < intervals; ++k) {
    const double a = t0 + static_cast<double>(k) * h;
    contrib[static_cast<std::size_t>(k)] =
        (h / 6.0) * (g(a) + 4.0 * g(a + h / 2.0) + g(a + h));
  }
  return kernels::sum(contrib);
}

std::vector<double> cumulative_simpson(const std::function<double(double)>& g,
                                       double t0, double h, long intervals) {
  std::vector<double> out(static_cast<std::size_t>(intervals) + 1);
  out[0] = 0.0;
  double acc = 0.0;
  double g_left = g(t0);
  for (long k = 0; k < intervals; ++k) {
    const double a = t0 + static_cast<double>(k) * h;
    const double g_right = g(a + h);
    acc += (h / 6.0) * (g_left + 4.0 * g(a + h / 2.0) + g_right);
    out[static_cast<std::size_t>(k) + 1] = acc;
    g_left = g_right;
  }
  return out;
}

double simpson_log_integral(const std::function<double(double)>& log_g,
                            double t0, double h, long intervals) {
  // Nodes at spacing h/2; Simpson weights h/6 {1, 4, 2, 4, ..., 4, 1}.
  const std::size_t npts = 2 * static_cast<std::size_t>(intervals) + 1;
  std::vector<double> logs(npts), weights(npts);
#pragma omp parallel for schedule(static)
  for (long i = 0; i < static_cast<long>(npts); ++i) {
    const double t = t0 + static_cast<double>(i) * (h / 2.0);
    logs[static_cast<std::size_t>(i)] = log_g(t);
    double w;
    if (i == 0 || i == static_cast<long>(npts) - 1)
      w = h / 6.0;
    else if (i % 2 == 1)
      w = 4.0 * h / 6.0;
    else
      w = 2.0 * h / 6.0;
    weights[static_cast<std::size_t>(i)] = w;
  }
  return kernels::log_sum_exp_weighted(logs, weights);
}

double simpson_log_integral_to(const std::function<double(double)>& log_g,
                               double upper, double h) {
  constexpr double kInf = std::numeric_limits<double>::infinity();
  const long whole = static_cast<long>(upper / h);
  double main_log = -kInf;
  if (whole > 0) main_log = simpson_log_integral(log_g, 0.0, h, whole);
  const double a = static_cast<double>(whole) * h;
  const double hp = upper - a;
  double part_log = -kInf;
  if (hp > 1e-14) {
    const double l0 = log_g(a), lm = log_g(a + hp / 2.0), l1 = log_g(upper);
    const double mx = std::max({l0, lm, l1});
    if (mx != -kInf)
      part_log = mx + std::log((hp / 6.0) * (std::exp(l0 - mx) +
                                             4.0 * std::exp(lm - mx) +
                                             std::exp(l1 - mx)));
  }
  const double mx = std::max(main_log, part_log);
  if (!std::isfinite(mx)) return mx;
  return mx + std::log1p(std::exp(std::min(main_log, part_log) - mx));
}

double golden_section_max(const std::function<double(double)>& f, double a,
                          double b, int iterations) {
  constexpr double inv_phi = 0.6180339887498949;
  double x1 = b - inv_phi * (b - a);
  double x2 = a + inv_phi * (b - a);
  double f1 = f(x1), f2 = f(x2);
  for (int i = 0; i < iterations && b - a > 0.0; ++i) {
    if (f1 < f2) {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + inv_phi * (b - a);
      f2 = f(x2);
    } else {
      b = x2;
      x2 = x1;
      f2 = f1;
      x1 = b - inv_phi * (b - a);
      f1 = f(x1);
    }
  }
  return 0.5 * (a + b);
}

}  // namespace willmore
