#pragma once

#include <cmath>

namespace willmore {

// Double-double value: an unevaluated sum hi + lo with |lo| <= ulp(hi)/2.
// Gives ~31 significant decimal digits, which is what the Wronskian and
// ratio-monotonicity checks need once psi grows like e^t: the conserved
// combination psi2*psi1' - psi1*psi2' sits ~2t/ln(10) digits below the
// magnitude of its two terms.
//
// Only the operations the integrator needs are provided (no transcendentals).
struct dd {
  double hi{0.0};
  double lo{0.0};

  constexpr dd() = default;
  constexpr dd(double x) : hi(x) {}
  constexpr dd(double h, double l) : hi(h), lo(l) {}
};

namespace detail {

inline dd two_sum(double a, double b) {
  const double s = a + b;
  const double bb = s - a;
  const double err = (a - (s - bb)) + (b - bb);
  return {s, err};
}

// Requires |a| >= |b| (or a == 0).
inline dd quick_two_sum(double a, double b) {
  const double s = a + b;
  return {s, b - (s - a)};
}

inline dd two_prod(double a, double b) {
  const double p = a * b;
  return {p, std::fma(a, b, -p)};
}

}  // namespace detail

inline double to_double(const dd& a) { return a.hi; }

inline dd operator+(const dd& a, const dd& b) {
  dd s = detail::two_sum(a.hi, b.hi);
  s.lo += a.lo + b.lo;
  return detail::quick_two_sum(s.hi, s.lo);
}

inline dd operator-(const dd& a) { return {-a.hi, -a.lo}; }

inline dd operator-(const dd& a, const dd& b) { return a + (-b); }

inline dd operator*(const dd& a, const dd& b) {
  dd p = detail::two_prod(a.hi, b.hi);
  p.lo += a.hi * b.lo + a.lo * b.hi;
  return detail::quick_two_sum(p.hi, p.lo);
}

inline dd operator*(const dd& a, double b) {
  dd p = detail::two_prod(a.hi, b);
  p.lo += a.lo * b;
  return detail::quick_two_sum(p.hi, p.lo);
}

inline dd operator*(double a, const dd& b) { return b * a; }

inline dd operator/(const dd& a, const dd& b) {
  const double q1 = a.hi / b.hi;
  dd r = a - b * q1;
  const double q2 = r.hi / b.hi;
  r = r - b * q2;
  const double q3 = r.hi / b.hi;
  dd q = detail::quick_two_sum(q1, q2);
  return q + dd(q3);
}

inline dd operator/(const dd& a, double b) { return a / dd(b); }

inline dd& operator+=(dd& a, const dd& b) { return a = a + b; }
inline dd& operator-=(dd& a, const dd& b) { return a = a - b; }

inline bool operator<(const dd& a, const dd& b) {
  return a.hi < b.hi || (a.hi == b.hi && a.lo < b.lo);
}
inline bool operator>(const dd& a, const dd& b) { return b < a; }
inline bool operator<=(const dd& a, const dd& b) { return !(b < a); }
inline bool operator>=(const dd& a, const dd& b) { return !(a < b); }

inline dd abs(const dd& a) { return a.hi < 0.0 ? -a : a; }

}  // namespace willmore
