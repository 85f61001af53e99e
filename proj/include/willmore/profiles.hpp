#pragma once

#include <functional>
#include <string>

namespace willmore {

enum class ProfileFamily { zero, exponential, power, smooth_bump };

// Curvature-decay function lambda(t) >= 0 with closed-form mass
// b = integral of lambda over [0, inf). Families are restricted to closed
// forms so mass and tail integrals carry no truncation error into the
// inequality margins.
//
//   zero          lambda = 0
//   exponential   lambda = a e^{-c t},        mass a/c
//   power         lambda = a (1+t)^{-s},      mass a/(s-1)
//   smooth_bump   plateau a on [t_lo, t_hi] with quintic-smoothstep edges of
//                 width (t_hi-t_lo)/4 (C^2), mass 0.75 a (t_hi-t_lo)
//
// smooth_bump is the only non-monotone family; operations that need a
// non-increasing profile reject it.
class DecayProfile {
 public:
  static DecayProfile zero();
  static DecayProfile exponential(double a, double c);
  static DecayProfile power(double a, double s);
  static DecayProfile smooth_bump(double a, double t_lo, double t_hi);

  ProfileFamily family() const { return family_; }
  bool monotone() const { return family_ != ProfileFamily::smooth_bump; }

  // lambda(t); t < 0 is a domain error.
  double operator()(double t) const;

  // b = integral over [0, inf), closed form.
  double total_mass() const;

  // integral of lambda over [0, t], closed form.
  double partial_mass(double t) const;

  // integral over [0, inf) of lambda(|d0 - t|)
  //   = partial_mass(d0) + total_mass()  <= 2 b.
  // Monotone families only.
  double mass_along_geodesic(double d0) const;

  // Compact id used in CSV rows, e.g. "exp[a=1 c=1]".
  std::string id() const;

  double param_a() const { return a_; }

 private:
  DecayProfile(ProfileFamily f, double a, double p1, double p2)
      : family_(f), a_(a), p1_(p1), p2_(p2) {}

  ProfileFamily family_{ProfileFamily::zero};
  double a_{0.0};   // amplitude
  double p1_{0.0};  // c (exponential), s (power), t_lo (bump)
  double p2_{0.0};  // t_hi (bump)
};

// Adapter for the ODE layer: Lambda(t) = lambda(t).
std::function<double(double)> lambda_fn(const DecayProfile& profile);

// Lambda(t) = lambda(|d0 - t|), the coefficient seen along a unit-speed
// geodesic leaving a point at distance d0 from the base point.
std::function<double(double)> lambda_along_geodesic(const DecayProfile& profile,
                                                    double d0);

}  // namespace willmore
