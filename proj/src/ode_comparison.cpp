#include "willmore/ode_comparison.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "willmore/numerics.hpp"

namespace willmore {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

double norm_slack(double bound, double value) {
  return (bound - value) / std::max(1.0, std::fabs(bound));
}

double checked_lambda(const std::function<double(double)>& Lambda, double t) {
  const double v = Lambda(t);
  if (!(v >= 0.0))
    throw std::domain_error("Lambda must be nonnegative on [0, t_max]");
  return v;
}

}  // namespace

PsiPair::PsiPair(const std::function<double(double)>& Lambda, double t_max,
                 double step) {
  require(t_max > 0.0, "solve_psi_pair: t_max must be positive");
  require(step > 0.0 && step <= 1e-2,
          "solve_psi_pair: step must lie in (0, 1e-2]");
  require(t_max <= 600.0,
          "solve_psi_pair: t_max > 600 exceeds the raw e^t representable "
          "range of the solution state");

  const long steps = grid_steps(t_max, step);
  h_ = t_max / static_cast<double>(steps);
  const std::size_t npts = static_cast<std::size_t>(steps) + 1;

  grid_.reserve(npts);
  psi1_.reserve(npts);
  dpsi1_.reserve(npts);
  psi2_.reserve(npts);
  dpsi2_.reserve(npts);

  // State: (psi1, psi1', psi2, psi2'). One Lambda evaluation per stage feeds
  // both solutions, so the pair sees identical coefficients.
  auto rhs = [&Lambda](double t, const std::array<dd, 4>& y,
                       std::array<dd, 4>& dy) {
    const double coeff = 1.0 + checked_lambda(Lambda, t);
    dy[0] = y[1];
    dy[1] = y[0] * coeff;
    dy[2] = y[3];
    dy[3] = y[2] * coeff;
  };
  std::array<dd, 4> y0{dd(0.0), dd(1.0), dd(1.0), dd(0.0)};
  rk4_integrate<dd, 4>(rhs, y0, 0.0, h_, steps,
                       [this](long, double t, const std::array<dd, 4>& y) {
                         grid_.push_back(t);
                         psi1_.push_back(y[0]);
                         dpsi1_.push_back(y[1]);
                         psi2_.push_back(y[2]);
                         dpsi2_.push_back(y[3]);
                       });

  auto fill = [&](OdeSolution& sol, const std::vector<dd>& p,
                  const std::vector<dd>& dp) {
    sol.grid = grid_;
    sol.psi.resize(npts);
    sol.dpsi.resize(npts);
    sol.lambda_samples.resize(npts);
    sol.log_psi.resize(npts);
    sol.dpsi_over_psi.resize(npts);
    for (std::size_t i = 0; i < npts; ++i) {
      sol.psi[i] = to_double(p[i]);
      sol.dpsi[i] = to_double(dp[i]);
      sol.lambda_samples[i] = Lambda(grid_[i]);
      sol.log_psi[i] = std::log(std::fabs(sol.psi[i]));
      sol.dpsi_over_psi[i] = sol.psi[i] == 0.0
                                 ? std::numeric_limits<double>::infinity()
                                 : to_double(dp[i] / p[i]);
    }
  };
  fill(sol1_, psi1_, dpsi1_);
  fill(sol2_, psi2_, dpsi2_);
}

double PsiPair::wronskian_max_drift() const {
  double worst = 0.0;
  for (std::size_t i = 0; i < grid_.size(); ++i) {
    const dd w = psi2_[i] * dpsi1_[i] - psi1_[i] * dpsi2_[i] - dd(1.0);
    worst = std::max(worst, std::fabs(to_double(w)));
  }
  return worst;
}

double PsiPair::ratio21(std::size_t i) const {
  return to_double(psi2_[i] / psi1_[i]);
}

double PsiPair::psi_value(std::size_t i, double H_over_n) const {
  return to_double(psi2_[i] + psi1_[i] * H_over_n);
}

double PsiPair::psi_deriv(std::size_t i, double H_over_n) const {
  return to_double(dpsi2_[i] + dpsi1_[i] * H_over_n);
}

PsiPair solve_psi_pair(const std::function<double(double)>& Lambda,
                       double t_max, double step) {
  return PsiPair(Lambda, t_max, step);
}

namespace {

// Companion integrals on the pair's grid, RK4 on (C, B, S):
//   C = int_0^t Lambda,  B = int_0^t e^C cosh,  S = int_0^t Lambda/cosh^2.
struct Companions {
  std::vector<double> cum_lambda, int_upper, sech2_int;
};

Companions integrate_companions(const PsiPair& pair,
                                const std::function<double(double)>& Lambda) {
  Companions c;
  const std::size_t npts = pair.size();
  c.cum_lambda.reserve(npts);
  c.int_upper.reserve(npts);
  c.sech2_int.reserve(npts);
  auto rhs = [&Lambda](double t, const std::array<double, 3>& y,
                       std::array<double, 3>& dy) {
    const double lam = Lambda(t);
    const double ch = std::cosh(t);
    dy[0] = lam;
    dy[1] = std::exp(y[0]) * ch;
    dy[2] = lam / (ch * ch);
  };
  std::array<double, 3> y0{0.0, 0.0, 0.0};
  rk4_integrate<double, 3>(rhs, y0, 0.0, pair.step(),
                           static_cast<long>(npts) - 1,
                           [&c](long, double, const std::array<double, 3>& y) {
                             c.cum_lambda.push_back(y[0]);
                             c.int_upper.push_back(y[1]);
                             c.sech2_int.push_back(y[2]);
                           });
  return c;
}

}  // namespace

double Lemma21Report::min_slack() const {
  double m = std::min({sinh_lower, int_upper, cosh_lower, exp_upper,
                       ratio_monotone, cap_pointwise});
  if (!std::isnan(cap_total)) m = std::min(m, cap_total);
  return m;
}

Lemma21Report check_lemma21(const PsiPair& pair,
                            const std::function<double(double)>& Lambda,
                            std::optional<double> lambda_mass) {
  const auto comp = integrate_companions(pair, Lambda);
  const auto& t = pair.grid();
  const std::size_t n = pair.size();

  Lemma21Report rep{};
  rep.sinh_lower = rep.int_upper = rep.cosh_lower = rep.exp_upper =
      rep.ratio_monotone = rep.cap_pointwise = rep.cap_total =
          std::numeric_limits<double>::infinity();
  if (!lambda_mass) rep.cap_total = kNaN;

  double prev_ratio = kNaN;
  for (std::size_t i = 1; i < n; ++i) {
    const double sh = std::sinh(t[i]);
    const double ch = std::cosh(t[i]);
    const double p1 = to_double(pair.psi1()[i]);
    const double dp1 = to_double(pair.dpsi1()[i]);

    rep.sinh_lower = std::min(rep.sinh_lower, norm_slack(p1, sh));
    rep.int_upper = std::min(rep.int_upper, norm_slack(comp.int_upper[i], p1));
    rep.cosh_lower = std::min(rep.cosh_lower, norm_slack(dp1, ch));
    const double cap = std::exp(comp.cum_lambda[i]);
    rep.exp_upper = std::min(rep.exp_upper, norm_slack(cap * ch, dp1));

    const double ratio = p1 / sh;
    rep.cap_pointwise = std::min(rep.cap_pointwise, norm_slack(cap, ratio));
    if (lambda_mass)
      rep.cap_total =
          std::min(rep.cap_total, norm_slack(std::exp(*lambda_mass), ratio));
    if (i >= 2)
      rep.ratio_monotone = std::min(rep.ratio_monotone,
                                    (ratio - prev_ratio) /
                                        std::max(1.0, std::fabs(prev_ratio)));
    prev_ratio = ratio;
  }
  rep.wronskian_drift = pair.wronskian_max_drift();
  return rep;
}

double Lemma22Report::min_slack() const {
  return std::min({bound, ratio_monotone, limit_bound});
}

Lemma22Report check_lemma22(const PsiPair& pair,
                            const std::function<double(double)>& Lambda) {
  const auto comp = integrate_companions(pair, Lambda);
  const auto& t = pair.grid();
  const std::size_t n = pair.size();

  std::vector<double> ratio(n, kNaN), inv_psi1_sq(n, kNaN);
  for (std::size_t i = 1; i < n; ++i) {
    ratio[i] = pair.ratio21(i);
    const double p1 = to_double(pair.psi1()[i]);
    inv_psi1_sq[i] = 1.0 / (p1 * p1);
  }

  Lemma22Report rep{};
  rep.bound = rep.ratio_monotone = rep.limit_bound =
      std::numeric_limits<double>::infinity();
  rep.deriv_identity_signed_max = -std::numeric_limits<double>::infinity();
  rep.deriv_identity_abs_max = 0.0;

  for (std::size_t i = 1; i < n; ++i) {
    const double rhs = 1.0 / std::tanh(t[i]) + comp.sech2_int[i];
    rep.bound = std::min(rep.bound, norm_slack(rhs, ratio[i]));
    if (i >= 2)
      rep.ratio_monotone =
          std::min(rep.ratio_monotone, (ratio[i - 1] - ratio[i]) /
                                           std::max(1.0, ratio[i - 1]));
    if (i >= 2 && i + 1 < n) {
      const double resid = fd3_deriv(ratio, i, pair.step()) + inv_psi1_sq[i];
      rep.deriv_identity_signed_max =
          std::max(rep.deriv_identity_signed_max, resid);
    }
    if (i >= 3 && i + 2 < n && t[i] >= 0.5) {
      // 5-point stencil: h^4 truncation, comfortably under 1e-6 from t = 0.5.
      const double resid = fd5_deriv(ratio, i, pair.step()) + inv_psi1_sq[i];
      rep.deriv_identity_abs_max =
          std::max(rep.deriv_identity_abs_max, std::fabs(resid));
    }
  }
  rep.limit_bound =
      norm_slack(1.0 + comp.sech2_int[n - 1], ratio[n - 1]);
  rep.wronskian_drift = pair.wronskian_max_drift();
  return rep;
}

std::optional<double> psi_zero_crossing(
    const std::function<double(double)>& Lambda, double H_over_n, double t_max,
    double step) {
  const PsiPair pair(Lambda, t_max, step);
  const auto& t = pair.grid();
  for (std::size_t i = 1; i < pair.size(); ++i) {
    const double v = pair.psi_value(i, H_over_n);
    if (v > 0.0) continue;
    if (v == 0.0) return t[i];
    // Bracketed in [t_{i-1}, t_i]; bisect a cubic Hermite model of psi.
    const double a = t[i - 1], h = pair.step();
    const double y0 = pair.psi_value(i - 1, H_over_n);
    const double y1 = v;
    const double d0 = pair.psi_deriv(i - 1, H_over_n);
    const double d1 = pair.psi_deriv(i, H_over_n);
    double lo = a, hi = t[i];
    while (hi - lo > 1e-10) {
      const double mid = 0.5 * (lo + hi);
      const double val = hermite_value(mid, a, h, y0, y1, d0, d1);
      (val > 0.0 ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
  }
  return std::nullopt;
}

double focal_bound_check(double two_b, double H_over_n) {
  require(two_b >= 0.0, "focal_bound_check: two_b must be nonnegative");
  require(H_over_n < -1.0 - two_b,
          "focal_bound_check requires H/n < -1 - two_b");
  const double c = -(two_b + H_over_n);  // > 1
  double t0 = std::atanh(1.0 / c) * (1.0 + 1e-8) + 1e-12;
  while (1.0 / std::tanh(t0) + two_b + H_over_n >= 0.0) t0 *= 1.0 + 1e-8;
  return t0;
}

}  // namespace willmore
