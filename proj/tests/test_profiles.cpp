#include <doctest.h>

#include <cmath>
#include <stdexcept>
#include <vector>

#include "oracles.hpp"
#include "willmore/profiles.hpp"

using willmore::DecayProfile;

namespace {

std::vector<DecayProfile> monotone_profiles() {
  return {DecayProfile::zero(), DecayProfile::exponential(1.0, 1.0),
          DecayProfile::exponential(0.5, 2.0), DecayProfile::power(1.0, 2.0),
          DecayProfile::power(2.0, 3.0)};
}

}  // namespace

TEST_SUITE_BEGIN("profiles");

TEST_CASE("pointwise evaluation") {
  CHECK(DecayProfile::zero()(5.0) == 0.0);
  CHECK(DecayProfile::exponential(1.0, 1.0)(0.0) == 1.0);
  CHECK(DecayProfile::power(1.0, 2.0)(1.0) == doctest::Approx(0.25));
  CHECK_THROWS_AS(DecayProfile::exponential(1.0, 1.0)(-0.1),
                  std::domain_error);
}

TEST_CASE("parameter validation") {
  CHECK_THROWS_AS(DecayProfile::exponential(-1.0, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(DecayProfile::exponential(1.0, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(DecayProfile::power(1.0, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(DecayProfile::smooth_bump(1.0, 2.0, 2.0),
                  std::invalid_argument);
  CHECK_THROWS_AS(DecayProfile::smooth_bump(1.0, -1.0, 2.0),
                  std::invalid_argument);
}

TEST_CASE("total mass closed forms against adaptive quadrature") {
  CHECK(DecayProfile::zero().total_mass() == 0.0);

  const auto exp11 = DecayProfile::exponential(1.0, 1.0);
  CHECK(exp11.total_mass() == doctest::Approx(1.0));
  const double q_exp =
      oracles::adaptive_simpson([&](double t) { return exp11(t); }, 0.0, 60.0,
                                1e-13) +
      std::exp(-60.0);  // analytic tail
  CHECK(oracles::rel_diff(exp11.total_mass(), q_exp) <= 1e-9);

  const auto pow23 = DecayProfile::power(2.0, 3.0);
  CHECK(pow23.total_mass() == doctest::Approx(1.0));
  const double B = 2000.0;
  const double q_pow =
      oracles::adaptive_simpson([&](double t) { return pow23(t); }, 0.0, B,
                                1e-13) +
      1.0 / ((1.0 + B) * (1.0 + B));  // analytic tail of 2(1+t)^-3
  CHECK(oracles::rel_diff(pow23.total_mass(), q_pow) <= 1e-9);

  const auto bump = DecayProfile::smooth_bump(0.8, 1.0, 3.0);
  CHECK(bump.total_mass() == doctest::Approx(0.8 * 0.75 * 2.0));
  const double q_bump = oracles::adaptive_simpson(
      [&](double t) { return bump(t); }, 1.0, 3.0, 1e-13);
  CHECK(oracles::rel_diff(bump.total_mass(), q_bump) <= 1e-10);
}

TEST_CASE("partial mass is an antiderivative") {
  const auto bump = DecayProfile::smooth_bump(0.5, 1.0, 2.0);
  for (double t : {0.5, 1.1, 1.3, 1.7, 1.9, 2.5}) {
    const double q = oracles::adaptive_simpson(
        [&](double u) { return bump(u); }, 0.0, t, 1e-13);
    CHECK(oracles::rel_diff(bump.partial_mass(t) + 1e-300, q + 1e-300) <=
          1e-9);
  }
  CHECK(bump.partial_mass(5.0) == bump.total_mass());
}

TEST_CASE("bump is continuous with plateau value a") {
  const auto bump = DecayProfile::smooth_bump(1.0, 1.0, 2.0);
  const double w = 0.25;
  CHECK(bump(1.0) == 0.0);
  CHECK(bump(2.0) == 0.0);
  CHECK(bump(1.0 + w) == doctest::Approx(1.0));
  CHECK(bump(1.5) == 1.0);
  CHECK(bump(1.0 + 1e-9) == doctest::Approx(0.0).epsilon(1e-6));
  CHECK(!bump.monotone());
}

TEST_CASE("monotone families are non-increasing on a sampled grid") {
  for (const auto& prof : monotone_profiles()) {
    double prev = prof(0.0);
    for (int i = 1; i <= 2000; ++i) {
      const double cur = prof(0.025 * i);
      CHECK(cur <= prev + 1e-15);
      prev = cur;
    }
  }
}

TEST_CASE("mass along a geodesic") {
  const auto exp11 = DecayProfile::exponential(1.0, 1.0);
  for (const auto& prof : monotone_profiles())
    CHECK(prof.mass_along_geodesic(0.0) == prof.total_mass());
  CHECK(DecayProfile::zero().mass_along_geodesic(3.0) == 0.0);
  CHECK(exp11.mass_along_geodesic(40.0) == doctest::Approx(2.0));

  // integral of lambda(|d0 - t|) over [0, inf) via quadrature
  const double d0 = 2.0;
  const double q = oracles::adaptive_simpson(
      [&](double t) { return exp11(std::fabs(d0 - t)); }, 0.0, 120.0, 1e-13);
  CHECK(oracles::rel_diff(exp11.mass_along_geodesic(d0), q) <= 1e-9);

  for (const auto& prof : monotone_profiles()) {
    const double two_b = 2.0 * prof.total_mass();
    double prev = -1.0;
    for (double dd : {0.0, 0.5, 1.0, 2.0, 5.0, 10.0, 40.0}) {
      const double v = prof.mass_along_geodesic(dd);
      CHECK(v <= two_b + 1e-12);
      CHECK(v >= prev - 1e-12);  // non-decreasing in d0
      prev = v;
    }
  }

  CHECK_THROWS_AS(
      DecayProfile::smooth_bump(1.0, 1.0, 2.0).mass_along_geodesic(1.0),
      std::invalid_argument);
}

TEST_SUITE_END();
