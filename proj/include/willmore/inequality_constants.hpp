#pragma once

#include <span>
#include <vector>

namespace willmore {

// Hypotheses of the polynomial-growth estimate
//   (1+b)^p <= 1 + eps + C(p,q,eps) eps^{-q} b^p   for all b >= 0.
struct Lemma31Params {
  double p;
  double q;
  double eps;

  // Validates p > 1, q > p-1, eps > 0.
  Lemma31Params(double p, double q, double eps);
};

// F(b) = eps^q ((1+b)^p - 1 - eps) / b^p, the quotient whose supremum over
// b > 0 is the sharp constant.
double lemma31_F(const Lemma31Params& params, double b);

// b_tilde = (1+eps)^{1/(p-1)} - 1, the unique critical point of F.
double critical_point(const Lemma31Params& params);

// C(p,q,eps) = max{F(b_tilde), eps^q}. F(b_tilde) = eps^q (1 + 1/b_tilde)^{p-1}
// strictly exceeds eps^q for finite b_tilde, so the second branch is a guard
// for the b -> infinity limit value rather than a reachable case.
double constant_C(const Lemma31Params& params);

// Independent supremum: golden-section over (0, 10 b_tilde + 10] combined
// with the limit value eps^q. Used to cross-check the closed form.
double numeric_sup_F(const Lemma31Params& params);

// min over the grid of ((1+eps+C eps^{-q} b^p) - (1+b)^p) / max(1, rhs).
double verify_pointwise(const Lemma31Params& params,
                        std::span<const double> b_grid);

// C(p,q,eps) along a decreasing eps grid; q > p-1 strictly.
std::vector<double> vanishing_limit(double p, double q,
                                    std::span<const double> eps_grid);

// Log-uniform grid helper for the pointwise sweeps.
std::vector<double> log_grid(double lo, double hi, int count);

}  // namespace willmore
