#include "willmore/inequality_constants.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "willmore/numerics.hpp"

namespace willmore {

Lemma31Params::Lemma31Params(double p_, double q_, double eps_)
    : p(p_), q(q_), eps(eps_) {
  require(p > 1.0, "lemma31 needs p > 1");
  require(q > p - 1.0, "lemma31 needs q > p - 1");
  require(eps > 0.0, "lemma31 needs eps > 0");
}

double lemma31_F(const Lemma31Params& params, double b) {
  require(b > 0.0, "F is defined for b > 0");
  // Powers through exp/log keep the relative error flat across the
  // 16-decade b range the sweeps cover.
  const double num = std::pow(1.0 + b, params.p) - 1.0 - params.eps;
  const double scale = std::exp(params.q * std::log(params.eps) -
                                params.p * std::log(b));
  return num * scale;
}

double critical_point(const Lemma31Params& params) {
  // (1+eps)^{1/(p-1)} - 1 via expm1/log1p; accurate down to eps ~ 1e-300.
  return std::expm1(std::log1p(params.eps) / (params.p - 1.0));
}

double constant_C(const Lemma31Params& params) {
  const double bt = critical_point(params);
  const double epsQ =
      std::exp(params.q / (params.p - 1.0) * std::log(params.eps));
  const double critical_value =
      std::pow(epsQ / bt + epsQ, params.p - 1.0);
  return std::max(critical_value, std::pow(params.eps, params.q));
}

double numeric_sup_F(const Lemma31Params& params) {
  const double bt = critical_point(params);
  const double hi = 10.0 * bt + 10.0;
  const double lo = std::min(1e-3 * bt, 1e-12);
  const double b_star = golden_section_max(
      [&](double b) { return lemma31_F(params, b); }, lo, hi);
  return std::max(lemma31_F(params, b_star), std::pow(params.eps, params.q));
}

double verify_pointwise(const Lemma31Params& params,
                        std::span<const double> b_grid) {
  const double C = constant_C(params);
  const double eps_neg_q = std::exp(-params.q * std::log(params.eps));
  double worst = std::numeric_limits<double>::infinity();
  for (double b : b_grid) {
    require(b > 0.0, "b grid must be positive");
    const double rhs =
        1.0 + params.eps + C * eps_neg_q * std::pow(b, params.p);
    const double lhs = std::pow(1.0 + b, params.p);
    worst = std::min(worst, (rhs - lhs) / std::max(1.0, rhs));
  }
  return worst;
}

std::vector<double> vanishing_limit(double p, double q,
                                    std::span<const double> eps_grid) {
  std::vector<double> out;
  out.reserve(eps_grid.size());
  for (double eps : eps_grid) out.push_back(constant_C(Lemma31Params(p, q, eps)));
  return out;
}

std::vector<double> log_grid(double lo, double hi, int count) {
  require(lo > 0.0 && hi > lo && count >= 2, "bad log grid");
  std::vector<double> out(static_cast<std::size_t>(count));
  const double llo = std::log(lo), lhi = std::log(hi);
  for (int i = 0; i < count; ++i)
    out[static_cast<std::size_t>(i)] =
        std::exp(llo + (lhi - llo) * static_cast<double>(i) /
                           static_cast<double>(count - 1));
  return out;
}

}  // namespace willmore
