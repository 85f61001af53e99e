#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "oracles.hpp"
#include "willmore/model_manifold.hpp"

using namespace willmore;

TEST_SUITE_BEGIN("model_manifold");

TEST_CASE("unit sphere volumes") {
  CHECK(sphere_volume_constant(1) == doctest::Approx(2.0 * M_PI));
  CHECK(sphere_volume_constant(2) == doctest::Approx(4.0 * M_PI));
  CHECK(sphere_volume_constant(3) == doctest::Approx(2.0 * M_PI * M_PI));
  CHECK_THROWS_AS(sphere_volume_constant(0), std::domain_error);
}

TEST_CASE("hyperbolic space has Ricci -n in every direction") {
  for (int n : {1, 2, 3}) {
    const auto m = RotSymManifold::hyperbolic(n, 45.0);
    for (double r : {0.1, 1.0, 40.0}) {
      const auto ric = ricci_extremes(m, r);
      CHECK(std::fabs(ric.radial + n) <= 1e-12);
      CHECK(std::fabs(ric.tangential + n) <= 1e-12);
      CHECK(rho_at(m, r) == 0.0);
    }
  }
}

TEST_CASE("zero-profile warp reproduces sinh") {
  const auto m = RotSymManifold::psi1_generated(2, DecayProfile::zero(), 45.0);
  for (double r : {0.5, 1.0, 5.0, 20.0, 40.0}) {
    CHECK(oracles::rel_diff(m.f(r), std::sinh(r)) <= 1e-7);
    CHECK(oracles::rel_diff(m.df(r), std::cosh(r)) <= 1e-7);
    CHECK(m.q_at(r) == 0.0);
    CHECK(rho_at(m, r) == 0.0);
  }
  const auto ric = ricci_extremes(m, 2.0);
  CHECK(std::fabs(ric.radial + 2) <= 1e-7);
  CHECK(std::fabs(ric.tangential + 2) <= 1e-7);
}

TEST_CASE("generated warp has radial Ricci -n(1+lambda) by construction") {
  const auto prof = DecayProfile::exponential(1.0, 1.0);
  const auto m = RotSymManifold::psi1_generated(2, prof, 10.0);
  const auto ric = ricci_extremes(m, 1.0);
  CHECK(oracles::rel_diff(ric.radial, -2.0 * (1.0 + std::exp(-1.0))) <= 1e-12);
}

TEST_CASE("companion Q agrees with the direct difference at moderate radii") {
  const auto m =
      RotSymManifold::psi1_generated(2, DecayProfile::exponential(0.5, 1.0),
                                     10.0);
  for (double r : {0.5, 1.0, 2.0, 3.0}) {
    const double direct = m.df(r) * m.df(r) - 1.0 - m.f(r) * m.f(r);
    CHECK(std::fabs(m.q_at(r) - direct) <=
          1e-7 * std::max(1.0, m.df(r) * m.df(r)));
  }
}

TEST_CASE("curvature bound margins") {
  // hyperbolic against the zero profile saturates everywhere
  const auto hyp = RotSymManifold::hyperbolic(2, 20.0);
  const auto rep0 = verify_curvature_bound(hyp, DecayProfile::zero());
  CHECK(std::fabs(rep0.min_margin) <= 1e-12);

  // power-generated warp against the zero profile: radially inadmissible
  const auto mp =
      RotSymManifold::psi1_generated(2, DecayProfile::power(1.0, 2.0), 20.0);
  const auto rep1 = verify_curvature_bound(mp, DecayProfile::zero());
  CHECK(rep1.radial < -1e-3);
  CHECK(rep1.min_margin < -1e-3);

  // a warp checked against its own generator: the radial direction
  // saturates; the tangential direction genuinely dips below -n - n lambda
  // because Q - lambda f^2 = int (-lambda') f^2 > 0 for strictly decreasing
  // lambda. The margin report keeps the two separated for exactly this case.
  const auto prof = DecayProfile::exponential(0.5, 1.0);
  const auto me = RotSymManifold::psi1_generated(2, prof, 20.0);
  const auto rep2 = verify_curvature_bound(me, prof);
  CHECK(std::fabs(rep2.radial) <= 1e-10);
  CHECK(rep2.tangential < -1e-3);
  CHECK(rep2.min_margin == rep2.tangential);
}

TEST_CASE("rho on a bump warp") {
  const auto m = RotSymManifold::psi1_generated(
      2, DecayProfile::smooth_bump(1.0, 1.0, 2.0), 20.0);
  // before the bump the warp is exactly sinh
  CHECK(rho_at(m, 0.5) == 0.0);
  // at the plateau the radial deficit alone is n*a
  CHECK(rho_at(m, 1.5) >= 2.0);
  // past the bump the tangential deficit persists but decays
  CHECK(rho_at(m, 3.0) > 0.0);
  CHECK(rho_at(m, 10.0) < rho_at(m, 3.0));
}

TEST_CASE("Lp norm of rho") {
  const auto hyp = RotSymManifold::hyperbolic(2, 25.0);
  CHECK(lp_norm_rho(hyp, 2.0, 20.0) == 0.0);

  const auto degenerate = RotSymManifold::psi1_generated(
      2, DecayProfile::smooth_bump(0.0, 1.0, 2.0), 25.0);
  CHECK(lp_norm_rho(degenerate, 2.0, 20.0) == 0.0);

  const auto bump = RotSymManifold::psi1_generated(
      2, DecayProfile::smooth_bump(0.1, 1.0, 2.0), 25.0);
  const double coarse = lp_norm_rho(bump, 2.0, 20.0);
  const auto bump_fine = RotSymManifold::psi1_generated(
      2, DecayProfile::smooth_bump(0.1, 1.0, 2.0), 25.0, 1e-4);
  const double fine = lp_norm_rho(bump_fine, 2.0, 20.0);
  CHECK(coarse > 0.0);
  CHECK(oracles::rel_diff(coarse, fine) <= 1e-6);

  CHECK_THROWS_AS(lp_norm_rho(hyp, 1.5, 20.0), std::invalid_argument);
}

TEST_CASE("boundary mean curvature of geodesic spheres") {
  const auto hyp = RotSymManifold::hyperbolic(2, 45.0);
  CHECK(boundary_mean_curvature({hyp, 1.0}) ==
        doctest::Approx(2.0 / std::tanh(1.0)));
  CHECK(std::fabs(boundary_mean_curvature({hyp, 40.0}) - 2.0) <= 1e-10);

  const auto mz = RotSymManifold::psi1_generated(2, DecayProfile::zero(), 5.0);
  CHECK(oracles::rel_diff(boundary_mean_curvature({mz, 1.0}),
                          2.0 / std::tanh(1.0)) <= 1e-7);

  // f' > 0 makes every geodesic sphere mean-convex
  const auto bump = RotSymManifold::psi1_generated(
      3, DecayProfile::smooth_bump(0.5, 1.0, 2.0), 10.0);
  for (double r0 : {0.25, 1.0, 4.0, 9.0})
    CHECK(boundary_mean_curvature({bump, r0}) > 0.0);
}

TEST_CASE("tube volumes in log scale") {
  // n = 2 closed form: 4 pi int_0^T sinh^2 = pi (sinh 2T - 2T)
  {
    const auto hyp = RotSymManifold::hyperbolic(2, 10.0);
    const GeodesicBallDomain dom(hyp, 1e-5);
    const double got = tube_volume_log(dom, 1.0 - 1e-5);
    const double expect = std::log(M_PI * (std::sinh(2.0) - 2.0));
    CHECK(oracles::rel_diff(got, expect) <= 1e-9);
  }
  // r = 0 degenerates to the ball volume
  {
    const auto hyp = RotSymManifold::hyperbolic(2, 10.0);
    const GeodesicBallDomain dom(hyp, 2.0);
    const double got = tube_volume_log(dom, 0.0);
    const double expect = std::log(M_PI * (std::sinh(4.0) - 4.0));
    CHECK(oracles::rel_diff(got, expect) <= 1e-9);
  }
  // n = 3 closed form at large radius, log scale:
  // 2 pi^2 int_0^T sinh^3 = 2 pi^2 (cosh^3 T / 3 - cosh T + 2/3)
  {
    const auto hyp = RotSymManifold::hyperbolic(3, 35.0);
    const GeodesicBallDomain dom(hyp, 1.0);
    const double got = tube_volume_log(dom, 30.0);
    const double c = std::cosh(31.0);
    const double expect =
        std::log(2.0 * M_PI * M_PI * (c * c * c / 3.0 - c + 2.0 / 3.0));
    CHECK(oracles::rel_diff(got, expect) <= 1e-8);
  }
  // strictly increasing in r
  {
    const auto hyp = RotSymManifold::hyperbolic(2, 50.0);
    const GeodesicBallDomain dom(hyp, 0.5);
    double prev = tube_volume_log(dom, 0.0);
    for (double r : {0.5, 1.0, 5.0, 20.0, 45.0}) {
      const double cur = tube_volume_log(dom, r);
      CHECK(cur > prev);
      prev = cur;
    }
  }
  // range errors
  {
    const auto hyp = RotSymManifold::hyperbolic(2, 10.0);
    const GeodesicBallDomain dom(hyp, 1.0);
    CHECK_THROWS_AS(tube_volume_log(dom, 20.0), std::out_of_range);
    CHECK_THROWS_AS(ricci_extremes(hyp, 11.0), std::out_of_range);
  }
}

TEST_CASE("domain validation") {
  const auto hyp = RotSymManifold::hyperbolic(2, 10.0);
  CHECK_THROWS_AS(GeodesicBallDomain(hyp, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(GeodesicBallDomain(hyp, 10.5), std::invalid_argument);
  CHECK_THROWS_AS(RotSymManifold::hyperbolic(2, 10.0, 0.5),
                  std::invalid_argument);
  CHECK_THROWS_AS(RotSymManifold::hyperbolic(2, 1000.0), std::invalid_argument);
}

TEST_SUITE_END();
