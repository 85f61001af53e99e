#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "willmore/model_manifold.hpp"

namespace willmore {

// Mean curvature m(t) and log-Jacobian of the outward normal evolution along
// a radial geodesic, with the matched hyperbolic comparators and the
// deviation phi = max(m - m_hat, 0). On the rotationally symmetric model the
// matrix Riccati system collapses to scalars: geodesic spheres are umbilic,
// so m(t) = n f'(r0+t)/f(r0+t) and log J(t) = n log(f(r0+t)/f(r0)) are exact.
struct TubeEvolution {
  std::vector<double> grid;
  std::vector<double> m;
  std::vector<double> logJ;
  std::vector<double> m_hat;     // NaN where the comparator degenerates
  std::vector<double> logJ_hat;  // (only possible when H < -n)
  std::vector<double> phi;
  std::optional<double> blow_up;  // first time m < -1e6, localized to 1e-6

  // max |FD5(logJ) - m| over interior grid points
  double fd_residual_logj = 0.0;
  // max |FD5(m_hat) + m_hat^2/n - n| and |FD5(logJ_hat) - m_hat|
  double fd_residual_mhat = 0.0;
  double fd_residual_logj_hat = 0.0;
};

TubeEvolution evolve_tube(const GeodesicBallDomain& domain, double t_max,
                          double step);

// Borderline scalar Riccati m' = n(1 + Lambda(t)) - m^2/n from m(0) = H0,
// independent of any manifold. Downward blow-up (m < -1e6) truncates the grid
// and records blow_up; the crossing is re-integrated at 1e-6 substeps.
TubeEvolution evolve_riccati_free(const std::function<double(double)>& Lambda,
                                  double H0, int n, double t_max, double step);

struct Comparator {
  double m_hat;
  double logJ_hat;
};

// Mean curvature / log-Jacobian of the hyperbolic geodesic-sphere comparison
// solution with initial mean curvature H0. Degenerate denominator (possible
// only for H0 < -n) is a domain error.
Comparator hyperbolic_comparators(double H0, int n, double t);

struct DetBound {
  double log_bound;  // n log(cosh t + (2b + H0/n) sinh t) + 2nb
  bool degenerate;   // argument of the log not positive
};

DetBound det_upper_bound(double b, double H0, int n, double t);

// min over the evolution grid of det_upper_bound(b, H, n, t) - logJ(t) with
// b the profile's total mass. Nonnegative (to solver tolerance) on every
// profile-generated manifold.
double det_estimate_margin(const GeodesicBallDomain& domain,
                           const DecayProfile& profile, double t_max,
                           double step);

// min over the grid (where psi > 0) of psi'/psi - m/n, with psi built from
// the pair solved against Lambda(t) = lambda(r0 + t) and psi'(0)/psi(0) =
// H/n. The comparison-lemma route and the warp route integrate the same
// scalar Riccati flow, so the margin is solver noise.
double riccati_vs_psi_margin(const GeodesicBallDomain& domain, double t_max,
                             double step);

struct LpComparisonReport {
  double lhs;
  double rhs;
  double margin;      // rhs - lhs
  double margin_rel;  // (rhs - lhs)/rhs; 0 when both sides vanish
};

// LHS = int_0^{t_max} phi^{2p} J dt against
// RHS = (n(2p-1)/(2p-1-n))^p int_0^{t_max} rho(r0+t)^p J dt,
// both by max-shifted Simpson quadrature. Requires p > (n+1)/2 and a
// mean-convex boundary.
LpComparisonReport verify_lp_mean_comparison(const GeodesicBallDomain& domain,
                                             double p, double t_max,
                                             double step);

// margin of J(r) <= J_hat(r) (1 + C(n,p) (int_0^r phi^{2p} J)^{1/2p})^{2p}
// in log-safe arithmetic.
LpComparisonReport verify_jacobian_comparison(const GeodesicBallDomain& domain,
                                              double p, double r, double step);

// C(n,p) = (1/2p) (int_0^infty cosh^{-n/(2p-1)} t dt)^{1 - 1/(2p)}, the
// x-independent constant valid under H >= 0 (J_hat >= cosh^n).
double cnp_constant(int n, double p);

// int_0^T cosh^{-alpha} t dt plus the analytic tail beyond T; exposed so the
// truncation-stability of cnp_constant can be probed directly.
double cosh_power_integral(double alpha, double T);

}  // namespace willmore
