#pragma once

#include <array>
#include <cmath>
#include <cstddef>
#include <functional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "willmore/kernels.hpp"

namespace willmore {

inline void require(bool cond, const std::string& what) {
  if (!cond) throw std::invalid_argument(what);
}

inline void require_range(bool cond, const std::string& what) {
  if (!cond) throw std::out_of_range(what);
}

// Classical fixed-step RK4 over std::array<Real, N> state. Real is double for
// the warp/Riccati solves and dd for the psi pair, where the conserved
// Wronskian must stay measurable against e^{2t} growth. The observer sees
// every grid state including the initial one: obs(i, t_i, y_i).
template <class Real, std::size_t N, class Rhs, class Observer>
void rk4_integrate(Rhs rhs, std::array<Real, N> y, double t0, double h,
                   long steps, Observer obs) {
  std::array<Real, N> k1, k2, k3, k4, tmp;
  obs(0L, t0, y);
  for (long i = 0; i < steps; ++i) {
    const double t = t0 + static_cast<double>(i) * h;
    rhs(t, y, k1);
    for (std::size_t j = 0; j < N; ++j) tmp[j] = y[j] + k1[j] * (h / 2.0);
    rhs(t + h / 2.0, tmp, k2);
    for (std::size_t j = 0; j < N; ++j) tmp[j] = y[j] + k2[j] * (h / 2.0);
    rhs(t + h / 2.0, tmp, k3);
    for (std::size_t j = 0; j < N; ++j) tmp[j] = y[j] + k3[j] * h;
    rhs(t + h, tmp, k4);
    for (std::size_t j = 0; j < N; ++j)
      y[j] = y[j] + (k1[j] + (k2[j] + k3[j]) * 2.0 + k4[j]) * (h / 6.0);
    obs(i + 1, t0 + static_cast<double>(i + 1) * h, y);
  }
}

// Number of RK4 steps for a [0, t_max] grid at the requested step. The actual
// step h = t_max/steps may round the request down slightly; a fixed integer
// count keeps grids reproducible.
inline long grid_steps(double t_max, double step) {
  require(t_max > 0.0, "t_max must be positive");
  require(step > 0.0, "step must be positive");
  return static_cast<long>(std::ceil(t_max / step - 1e-9));
}

// Composite Simpson over K uniform intervals of width h starting at t0,
// sampling g at nodes and midpoints. 4th order.
double simpson_integral(const std::function<double(double)>& g, double t0,
                        double h, long intervals);

// Prefix integrals: out[i] = integral of g over [t0, t0 + i h], one Simpson
// rule per interval. out.size() == intervals + 1.
std::vector<double> cumulative_simpson(const std::function<double(double)>& g,
                                       double t0, double h, long intervals);

// log of the integral of exp(log_g(s)) over [t0, t0 + K h], composite Simpson
// accumulated in max-shifted form so integrands like f(s)^n never overflow.
double simpson_log_integral(const std::function<double(double)>& log_g,
                            double t0, double h, long intervals);

// Same, over [0, upper] for an upper limit that need not sit on the h-grid:
// whole intervals plus one short closing interval.
double simpson_log_integral_to(const std::function<double(double)>& log_g,
                               double upper, double h);

// Cubic Hermite on one interval [t0, t0+h] from endpoint values/derivatives.
inline double hermite_value(double t, double t0, double h, double y0,
                            double y1, double d0, double d1) {
  const double u = (t - t0) / h;
  const double u2 = u * u, u3 = u2 * u;
  return (2 * u3 - 3 * u2 + 1) * y0 + (u3 - 2 * u2 + u) * h * d0 +
         (-2 * u3 + 3 * u2) * y1 + (u3 - u2) * h * d1;
}

inline double hermite_deriv(double t, double t0, double h, double y0,
                            double y1, double d0, double d1) {
  const double u = (t - t0) / h;
  const double u2 = u * u;
  return ((6 * u2 - 6 * u) * y0 + (3 * u2 - 4 * u + 1) * h * d0 +
          (-6 * u2 + 6 * u) * y1 + (3 * u2 - 2 * u) * h * d1) /
         h;
}

// Five-point central first derivative; i must be in [2, y.size()-3].
inline double fd5_deriv(std::span<const double> y, std::size_t i, double h) {
  return (y[i - 2] - 8.0 * y[i - 1] + 8.0 * y[i + 1] - y[i + 2]) / (12.0 * h);
}

inline double fd3_deriv(std::span<const double> y, std::size_t i, double h) {
  return (y[i + 1] - y[i - 1]) / (2.0 * h);
}

// log(cosh t + c sinh t) for t >= 0, overflow-safe; NaN when the argument is
// not positive (the comparator denominators degenerate there).
inline double log_cosh_plus_c_sinh(double t, double c) {
  if (t < 20.0) {
    const double arg = std::cosh(t) + c * std::sinh(t);
    return arg > 0.0 ? std::log(arg) : std::nan("");
  }
  const double u = (1.0 + c) + (1.0 - c) * std::exp(-2.0 * t);
  return u > 0.0 ? t - M_LN2 + std::log(u) : std::nan("");
}

// Golden-section maximization of a unimodal function on [a, b].
double golden_section_max(const std::function<double(double)>& f, double a,
                          double b, int iterations = 240);

}  // namespace willmore
