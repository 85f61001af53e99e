// Acceptance suite: one pass/fail line per criterion, tolerances pinned in
// code. Exit code 0 iff every criterion passes within its runtime budget.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "willmore/inequality_constants.hpp"
#include "willmore/model_manifold.hpp"
#include "willmore/ode_comparison.hpp"
#include "willmore/profiles.hpp"
#include "willmore/runner.hpp"
#include "willmore/tube_geometry.hpp"
#include "willmore/willmore_verifier.hpp"

using namespace willmore;

namespace {

struct Criterion {
  int id;
  std::string name;
  double budget_s;
  std::function<bool(std::string&)> run;
};

bool expect(bool cond, std::string& detail, const std::string& what) {
  if (!cond && detail.empty()) detail = "failed: " + what;
  return cond;
}

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3g", v);
  return buf;
}

// ---- criterion bodies -----------------------------------------------------

bool c1_hyperbolic_equality(std::string& detail) {
  bool ok = true;
  double worst = 0.0;
  for (int n : {1, 2, 3}) {
    const auto hyp = RotSymManifold::hyperbolic(n, 45.0);
    for (double r0 : {0.5, 1.0, 2.0}) {
      const auto rep = verify_thm11({hyp, r0}, DecayProfile::zero(), 40.0);
      const double dev = std::fabs(rep.lhs - rep.rhs) / rep.rhs;
      worst = std::max(worst, dev);
      ok &= expect(dev <= 1e-6, detail,
                   "equality deviation " + num(dev) + " at n=" +
                       std::to_string(n) + " r0=" + num(r0));
      const double closed =
          sphere_volume_constant(n) * std::exp(static_cast<double>(n) * r0);
      ok &= expect(std::fabs(rep.lhs - closed) <= 1e-6 * closed, detail,
                   "lhs vs closed form omega_n e^{n r0}");
    }
  }
  if (ok) detail = "max |lhs-rhs|/rhs = " + num(worst);
  return ok;
}

bool c2_comparison_lemmas(std::string& detail) {
  bool ok = true;
  double worst_slack = 1e300, worst_wronskian = 0.0;
  const std::vector<DecayProfile> profiles{
      DecayProfile::zero(), DecayProfile::exponential(1.0, 1.0),
      DecayProfile::exponential(0.5, 2.0), DecayProfile::power(1.0, 2.0)};
  for (const auto& prof : profiles) {
    const auto pair = solve_psi_pair(lambda_fn(prof), 20.0, 1e-3);
    const auto r21 = check_lemma21(pair, lambda_fn(prof), prof.total_mass());
    const auto r22 = check_lemma22(pair, lambda_fn(prof));
    const double slack = std::min(r21.min_slack(), r22.min_slack());
    worst_slack = std::min(worst_slack, slack);
    worst_wronskian = std::max(worst_wronskian, r21.wronskian_drift);
    ok &= expect(slack >= -1e-9, detail,
                 prof.id() + " slack " + num(slack));
    ok &= expect(r21.wronskian_drift <= 1e-8, detail,
                 prof.id() + " wronskian " + num(r21.wronskian_drift));
    ok &= expect(r21.ratio_monotone >= -1e-9, detail,
                 prof.id() + " psi1/sinh monotone");
    ok &= expect(r21.cap_total >= -1e-9, detail,
                 prof.id() + " psi1/sinh cap e^{mass}");
    ok &= expect(r22.ratio_monotone >= -1e-9, detail,
                 prof.id() + " psi2/psi1 monotone");
    ok &= expect(r22.deriv_identity_signed_max <= 1e-6, detail,
                 prof.id() + " (psi2/psi1)' + 1/psi1^2 pointwise");
    ok &= expect(r22.deriv_identity_abs_max <= 1e-6, detail,
                 prof.id() + " derivative identity, absolute");
  }
  if (ok)
    detail = "min slack " + num(worst_slack) + ", max wronskian drift " +
             num(worst_wronskian);
  return ok;
}

bool c3_polynomial_estimate(std::string& detail) {
  bool ok = true;
  const auto b_grid = log_grid(1e-8, 1e8, 60);
  double worst_margin = 1e300, worst_sup = 0.0;
  for (auto [p, q] : std::vector<std::pair<double, double>>{
           {2.0, 3.0}, {2.0, 4.0}, {3.0, 2.5}}) {
    std::vector<double> c_values;
    for (double eps : {1.0, 0.1, 0.01, 1e-4, 1e-6}) {
      const Lemma31Params params(p, q, eps);
      const double margin = verify_pointwise(params, b_grid);
      worst_margin = std::min(worst_margin, margin);
      ok &= expect(margin >= -1e-9, detail, "pointwise margin " + num(margin));
      const double C = constant_C(params);
      const double rel = std::fabs(C - numeric_sup_F(params)) / C;
      worst_sup = std::max(worst_sup, rel);
      ok &= expect(rel <= 1e-8, detail, "closed form vs numeric sup");
      c_values.push_back(C);
    }
    ok &= expect(c_values.back() <= 1e-3 * c_values.front(), detail,
                 "vanishing limit at eps = 1e-6");
  }
  if (ok)
    detail = "min margin " + num(worst_margin) + ", sup mismatch " +
             num(worst_sup);
  return ok;
}

bool c4_focal_blowup(std::string& detail) {
  bool ok = true;
  const int n = 2;
  for (double b : {0.0, 1.0}) {
    for (double base : {-1.5, -3.0}) {
      const double h0n = base - 2.0 * b;
      auto Lambda = [b](double t) { return 2.0 * b * std::exp(-t); };
      const double t0 = focal_bound_check(2.0 * b, h0n);
      const auto ev = evolve_riccati_free(Lambda, h0n * n, n, 5.0, 1e-3);
      ok &= expect(ev.blow_up.has_value(), detail,
                   "finite blow-up at b=" + num(b) + " H0/n=" + num(h0n));
      if (ev.blow_up)
        ok &= expect(*ev.blow_up <= t0 + 1e-6, detail,
                     "blow_up " + num(*ev.blow_up) + " vs t0 " + num(t0));
    }
  }
  if (ok) detail = "4 cases, blow_up <= t0 + 1e-6";
  return ok;
}

bool c5_det_estimate(std::string& detail) {
  bool ok = true;
  const auto prof = DecayProfile::exponential(0.5, 2.0);
  const auto m = RotSymManifold::psi1_generated(2, prof, 12.0);
  double worst = 1e300;
  for (double r0 : {0.5, 1.0}) {
    const double margin = det_estimate_margin({m, r0}, prof, 10.0, 1e-3);
    worst = std::min(worst, margin);
    ok &= expect(margin >= -1e-7, detail,
                 "logJ exceeded the bound, margin " + num(margin));
  }
  if (ok) detail = "min log-margin " + num(worst);
  return ok;
}

bool c6_lp_chain(std::string& detail) {
  bool ok = true;
  const auto bump = DecayProfile::smooth_bump(0.1, 1.0, 2.0);
  const auto coarse = RotSymManifold::psi1_generated(2, bump, 25.0, 1e-3);
  const auto fine = RotSymManifold::psi1_generated(2, bump, 25.0, 5e-4);

  const auto mean_c = verify_lp_mean_comparison({coarse, 0.5}, 2.0, 20.0, 1e-3);
  const auto mean_f = verify_lp_mean_comparison({fine, 0.5}, 2.0, 20.0, 5e-4);
  ok &= expect(mean_c.margin_rel >= -1e-9, detail, "mean comparison margin");
  ok &= expect(mean_f.margin_rel >= -1e-9, detail, "mean comparison (fine)");
  ok &= expect(std::fabs(mean_c.margin_rel - mean_f.margin_rel) <= 1e-5,
               detail, "mean margin resolution drift");

  const auto jac_c = verify_jacobian_comparison({coarse, 0.5}, 2.0, 3.0, 1e-3);
  const auto jac_f = verify_jacobian_comparison({fine, 0.5}, 2.0, 3.0, 5e-4);
  ok &= expect(jac_c.margin_rel >= -1e-9, detail, "jacobian margin");
  ok &= expect(jac_f.margin_rel >= -1e-9, detail, "jacobian margin (fine)");
  ok &= expect(std::fabs(jac_c.margin_rel - jac_f.margin_rel) <= 1e-5, detail,
               "jacobian margin resolution drift");
  if (ok)
    detail = "margins " + num(mean_c.margin_rel) + " (mean), " +
             num(jac_c.margin_rel) + " (jacobian)";
  return ok;
}

bool c7_thm12_end_to_end(std::string& detail) {
  bool ok = true;
  const auto bump = RotSymManifold::psi1_generated(
      2, DecayProfile::smooth_bump(0.1, 1.0, 2.0), 45.0);
  const auto rep = verify_thm12({bump, 0.5}, 2.0, 40.0, 20.0);
  ok &= expect(rep.margin >= -1e-6 * rep.rhs, detail,
               "thm12 margin " + num(rep.margin));

  const auto degen = RotSymManifold::psi1_generated(
      2, DecayProfile::smooth_bump(0.0, 1.0, 2.0), 45.0);
  const auto rep0 = verify_thm12({degen, 0.5}, 2.0, 40.0, 20.0);
  ok &= expect(std::fabs(rep0.margin) <= 1e-6 * rep0.rhs, detail,
               "degenerate bump equality");

  double prev = -1.0;
  for (double rho : {0.0, 1e-6, 1e-4, 1e-2}) {
    const double c = compose_thm12_constant(2, 2.0, rho).c_total;
    ok &= expect(c >= prev, detail, "C_total monotone in rho_norm");
    if (rho == 0.0) ok &= expect(c == 0.0, detail, "C_total(0) = 0");
    prev = c;
  }
  if (ok)
    detail = "margin/rhs " + num(rep.margin / rep.rhs) +
             ", equality dev " + num(std::fabs(rep0.margin) / rep0.rhs);
  return ok;
}

bool c8_rv_estimator(std::string& detail) {
  bool ok = true;
  double worst_spread = 0.0, worst_agree = 0.0;
  // The raw ratio converges like the warp generator's tail: f/sinh - L is
  // the tail integral of lambda e^{2s} weights, so lambda ~ e^{-c s} gives
  // rate e^{-min(c,2) r} and power decay only 1/r. Diagnostic convergence to
  // 1e-6 at r in {10,20,40} is therefore attainable exactly for generators
  // with decay rate >= 2 (and trivially for hyperbolic); slower warps are the
  // ones the converged-flag exists to catch.
  std::vector<std::pair<std::string, RotSymManifold>> suite;
  suite.emplace_back("hyperbolic n=2", RotSymManifold::hyperbolic(2, 45.0));
  suite.emplace_back("hyperbolic n=3", RotSymManifold::hyperbolic(3, 45.0));
  suite.emplace_back("psi1(zero)", RotSymManifold::psi1_generated(
                                       2, DecayProfile::zero(), 45.0));
  suite.emplace_back("psi1(exp[0.5,2])",
                     RotSymManifold::psi1_generated(
                         2, DecayProfile::exponential(0.5, 2.0), 45.0));
  suite.emplace_back("psi1(exp[1,2.5])",
                     RotSymManifold::psi1_generated(
                         2, DecayProfile::exponential(1.0, 2.5), 45.0));
  suite.emplace_back("psi1(bump[0.1,1,2])",
                     RotSymManifold::psi1_generated(
                         2, DecayProfile::smooth_bump(0.1, 1.0, 2.0), 45.0));
  for (const auto& [name, man] : suite) {
    const auto est = estimate_rv({man, 1.0}, 40.0);
    double lo = 1e300, hi = -1e300;
    for (const auto& [r, ratio] : est.raw_ratios) {
      lo = std::min(lo, ratio);
      hi = std::max(hi, ratio);
    }
    const double spread = (hi - lo) / hi;
    worst_spread = std::max(worst_spread, spread);
    ok &= expect(spread <= 1e-6, detail, name + " raw spread " + num(spread));
    const double agree =
        std::fabs(est.rv - est.raw_ratios[2].second) / est.rv;
    worst_agree = std::max(worst_agree, agree);
    ok &= expect(agree <= 1e-6, detail, name + " estimator agreement");
  }
  // a slow-decay generator must be flagged, not silently trusted
  const auto slow =
      RotSymManifold::psi1_generated(2, DecayProfile::power(1.0, 2.0), 45.0);
  ok &= expect(!estimate_rv({slow, 1.0}, 40.0).converged, detail,
               "power-decay warp should report a non-converged diagnostic");
  if (ok)
    detail = "max spread " + num(worst_spread) + ", max disagreement " +
             num(worst_agree);
  return ok;
}

bool c9_determinism(std::string& detail) {
  const std::string cfg = R"({"command":"sweep","theorem":"thm11"})";
  const auto a = run_command("sweep", cfg);
  const auto b = run_command("sweep", cfg);
  bool ok = a.exit_code == 0 && b.exit_code == 0 && a.files == b.files;
  if (!ok)
    detail = "sweep runs differ or failed";
  else
    detail = "two sweep runs byte-identical (" +
             std::to_string(a.files.front().second.size()) + " bytes)";
  return ok;
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "hyperbolic equality of the asymptotic inequality", 5.0,
       c1_hyperbolic_equality},
      {2, "comparison ODE bound suites", 10.0, c2_comparison_lemmas},
      {3, "polynomial-growth estimate and its constant", 2.0,
       c3_polynomial_estimate},
      {4, "focal blow-up below the threshold", 2.0, c4_focal_blowup},
      {5, "determinant estimate along tubes", 3.0, c5_det_estimate},
      {6, "Lp mean-curvature and Jacobian comparisons", 5.0, c6_lp_chain},
      {7, "integral-curvature inequality end to end", 10.0,
       c7_thm12_end_to_end},
      {8, "relative volume ratio estimator", 5.0, c8_rv_estimator},
      {9, "byte-identical sweep reruns", 30.0, c9_determinism},
  };

  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    std::string detail;
    bool ok = false;
    try {
      ok = c.run(detail);
    } catch (const std::exception& e) {
      detail = std::string("exception: ") + e.what();
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
            .count();
    if (secs > c.budget_s) {
      ok = false;
      detail += " [over budget " + num(c.budget_s) + " s]";
    }
    std::printf("%s  criterion %d: %s (%s) [%.2f s]\n", ok ? "PASS" : "FAIL",
                c.id, c.name.c_str(), detail.c_str(), secs);
    if (!ok) ++failures;
  }
  if (failures) std::printf("%d criterion(s) failed\n", failures);
  return failures == 0 ? 0 : 1;
}
