#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "willmore/model_manifold.hpp"

namespace willmore {

// Raised when a domain fails the curvature-bound gate for the asymptotic
// inequality; carries the offending margin.
class AdmissibilityError : public std::runtime_error {
 public:
  AdmissibilityError(const std::string& what, double margin)
      : std::runtime_error(what), margin_(margin) {}
  double margin() const { return margin_; }

 private:
  double margin_;
};

struct RvEstimate {
  double rv;  // derivative-ratio (l'Hopital) estimate (f(r0+r)/sinh r)^n
  // raw tube-volume / hyperbolic-ball ratios at r_eval/4, r_eval/2, r_eval
  std::vector<std::pair<double, double>> raw_ratios;
  double spread_rel;  // |raw(r_eval/2) - raw(r_eval)| / raw(r_eval)
  bool converged;     // spread_rel <= 1e-6
};

// The raw ratio of exponentially growing integrals sheds accuracy the
// derivative ratio keeps, so the latter is the estimate and the former the
// diagnostic. Non-convergence flags the report; it is not an error.
RvEstimate estimate_rv(const GeodesicBallDomain& domain, double r_eval);

// e^{2nb} omega_n f(r0)^n (1 + 2b + H/n)^n when H >= -n - 2nb, else 0.
// The profile must be non-increasing; the domain must pass the radial
// curvature gate (Ric(d_r,d_r) >= -n - n lambda along the geodesics the tube
// estimate integrates), else AdmissibilityError.
double thm11_rhs(const GeodesicBallDomain& domain, const DecayProfile& profile);

struct WillmoreReport {
  std::string theorem;  // "thm11" | "thm12"
  int n = 0;
  double p = 0.0;  // 0 when not applicable
  double r0 = 0.0;
  std::string profile_id;
  double lhs = 0.0;
  double rhs = 0.0;
  double margin = 0.0;  // rhs - lhs
  double rv = 0.0;
  double rv_spread = 0.0;
  bool rv_converged = false;
  std::vector<std::pair<double, double>> rv_convergence;
  double admissibility = 0.0;  // radial curvature-bound margin (gating)
  double b = 0.0;
  double rho_norm = 0.0;
  double c_total = 0.0;
  std::map<std::string, double> constants;
  double tol_rel = 1e-6;
  bool pass = false;  // margin >= -tol_rel * max(1, |rhs|)
};

WillmoreReport verify_thm11(const GeodesicBallDomain& domain,
                            const DecayProfile& profile, double r_eval,
                            double tol_rel = 1e-6);

// The proof chain behind the integral-curvature constant, composed
// explicitly: with eps = rho_norm^{1/2} and q = 2p,
//   C_total = C_lemma(2p, q, eps) * C(n,p)^{2p} * (n(2p-1)/(2p-1-n))^p,
// and C_total = 0 at rho_norm = 0.
struct Thm12Constants {
  double eps = 0.0;
  double q = 0.0;
  double c_lemma = 0.0;
  double c_np = 0.0;
  double lp_factor = 0.0;
  double c_total = 0.0;
};

Thm12Constants compose_thm12_constant(int n, double p, double rho_norm);

WillmoreReport verify_thm12(const GeodesicBallDomain& domain, double p,
                            double r_eval, double r_cut, double tol_rel = 1e-6);

}  // namespace willmore
