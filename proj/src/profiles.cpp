#include "willmore/profiles.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

#include "willmore/numerics.hpp"

namespace willmore {

namespace {

// Quintic smoothstep: C^2, s(0)=0, s(1)=1, s'=s''=0 at both ends.
double smoothstep5(double u) { return u * u * u * (10.0 + u * (-15.0 + 6.0 * u)); }

// Antiderivative of smoothstep5 with S(0)=0; S(1) = 1/2.
double smoothstep5_int(double u) {
  const double u4 = u * u * u * u;
  return u4 * (2.5 + u * (-3.0 + u));
}

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%g", v);
  return buf;
}

}  // namespace

DecayProfile DecayProfile::zero() {
  return DecayProfile(ProfileFamily::zero, 0.0, 0.0, 0.0);
}

DecayProfile DecayProfile::exponential(double a, double c) {
  require(a >= 0.0, "exponential profile needs amplitude a >= 0");
  require(c > 0.0, "exponential profile needs rate c > 0");
  return DecayProfile(ProfileFamily::exponential, a, c, 0.0);
}

DecayProfile DecayProfile::power(double a, double s) {
  require(a >= 0.0, "power profile needs amplitude a >= 0");
  require(s > 1.0, "power profile needs exponent s > 1");
  return DecayProfile(ProfileFamily::power, a, s, 0.0);
}

DecayProfile DecayProfile::smooth_bump(double a, double t_lo, double t_hi) {
  require(a >= 0.0, "bump profile needs amplitude a >= 0");
  require(t_lo >= 0.0 && t_lo < t_hi, "bump profile needs 0 <= t_lo < t_hi");
  return DecayProfile(ProfileFamily::smooth_bump, a, t_lo, t_hi);
}

double DecayProfile::operator()(double t) const {
  if (t < 0.0) throw std::domain_error("lambda(t) evaluated at t < 0");
  switch (family_) {
    case ProfileFamily::zero:
      return 0.0;
    case ProfileFamily::exponential:
      return a_ * std::exp(-p1_ * t);
    case ProfileFamily::power:
      return a_ * std::pow(1.0 + t, -p1_);
    case ProfileFamily::smooth_bump: {
      const double lo = p1_, hi = p2_, w = (hi - lo) / 4.0;
      if (t <= lo || t >= hi) return 0.0;
      if (t < lo + w) return a_ * smoothstep5((t - lo) / w);
      if (t > hi - w) return a_ * smoothstep5((hi - t) / w);
      return a_;
    }
  }
  return 0.0;
}

double DecayProfile::total_mass() const {
  switch (family_) {
    case ProfileFamily::zero:
      return 0.0;
    case ProfileFamily::exponential:
      return a_ / p1_;
    case ProfileFamily::power:
      return a_ / (p1_ - 1.0);
    case ProfileFamily::smooth_bump:
      // plateau of length (hi-lo) - 2w plus two edges of mass a w/2 each
      return a_ * 0.75 * (p2_ - p1_);
  }
  return 0.0;
}

double DecayProfile::partial_mass(double t) const {
  if (t < 0.0) throw std::domain_error("partial_mass evaluated at t < 0");
  switch (family_) {
    case ProfileFamily::zero:
      return 0.0;
    case ProfileFamily::exponential:
      return (a_ / p1_) * -std::expm1(-p1_ * t);
    case ProfileFamily::power:
      return (a_ / (p1_ - 1.0)) * (1.0 - std::pow(1.0 + t, 1.0 - p1_));
    case ProfileFamily::smooth_bump: {
      const double lo = p1_, hi = p2_, w = (hi - lo) / 4.0;
      if (t <= lo) return 0.0;
      if (t >= hi) return total_mass();
      if (t < lo + w) return a_ * w * smoothstep5_int((t - lo) / w);
      if (t <= hi - w) return a_ * w * 0.5 + a_ * (t - lo - w);
      return a_ * w * 0.5 + a_ * (hi - lo - 2.0 * w) +
             a_ * w * (0.5 - smoothstep5_int((hi - t) / w));
    }
  }
  return 0.0;
}

double DecayProfile::mass_along_geodesic(double d0) const {
  require(d0 >= 0.0, "mass_along_geodesic needs d0 >= 0");
  if (!monotone())
    throw std::invalid_argument(
        "mass_along_geodesic needs a non-increasing profile");
  return partial_mass(d0) + total_mass();
}

std::string DecayProfile::id() const {
  switch (family_) {
    case ProfileFamily::zero:
      return "zero";
    case ProfileFamily::exponential:
      return "exp[a=" + fmt(a_) + " c=" + fmt(p1_) + "]";
    case ProfileFamily::power:
      return "power[a=" + fmt(a_) + " s=" + fmt(p1_) + "]";
    case ProfileFamily::smooth_bump:
      return "bump[a=" + fmt(a_) + " lo=" + fmt(p1_) + " hi=" + fmt(p2_) + "]";
  }
  return "?";
}

std::function<double(double)> lambda_fn(const DecayProfile& profile) {
  return [profile](double t) { return profile(t); };
}

std::function<double(double)> lambda_along_geodesic(const DecayProfile& profile,
                                                    double d0) {
  require(d0 >= 0.0, "lambda_along_geodesic needs d0 >= 0");
  return [profile, d0](double t) { return profile(std::fabs(d0 - t)); };
}

}  // namespace willmore
