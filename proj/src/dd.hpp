#pragma once

#include <cmath>
#include <complex>

// Minimal double-double arithmetic for the two evaluation routes whose
// assembly formulas cancel heavily (1D-Hermite composition, Laguerre slice).
// Only the operations those routes need.

namespace h2v::dd {

struct Dd {
  double hi = 0.0;
  double lo = 0.0;
};

inline Dd two_sum(double a, double b) {
  const double s = a + b;
  const double bb = s - a;
  return {s, (a - (s - bb)) + (b - bb)};
}

inline Dd two_prod(double a, double b) {
  const double p = a * b;
  return {p, std::fma(a, b, -p)};
}

inline Dd add(Dd a, Dd b) {
  Dd s = two_sum(a.hi, b.hi);
  s.lo += a.lo + b.lo;
  const double hi = s.hi + s.lo;
  return {hi, s.lo - (hi - s.hi)};
}

inline Dd sub(Dd a, Dd b) { return add(a, {-b.hi, -b.lo}); }

inline Dd mul(Dd a, Dd b) {
  Dd p = two_prod(a.hi, b.hi);
  p.lo += a.hi * b.lo + a.lo * b.hi;
  const double hi = p.hi + p.lo;
  return {hi, p.lo - (hi - p.hi)};
}

inline Dd from(double x) { return {x, 0.0}; }
inline double to_double(Dd a) { return a.hi + a.lo; }

struct Cdd {
  Dd re;
  Dd im;
};

inline Cdd from(std::complex<double> z) { return {from(z.real()), from(z.imag())}; }
inline std::complex<double> to_complex(Cdd z) { return {to_double(z.re), to_double(z.im)}; }

inline Cdd add(Cdd a, Cdd b) { return {add(a.re, b.re), add(a.im, b.im)}; }
inline Cdd sub(Cdd a, Cdd b) { return {sub(a.re, b.re), sub(a.im, b.im)}; }
inline Cdd mul(Cdd a, Cdd b) {
  return {sub(mul(a.re, b.re), mul(a.im, b.im)), add(mul(a.re, b.im), mul(a.im, b.re))};
}
inline Cdd mul(Cdd a, Dd s) { return {mul(a.re, s), mul(a.im, s)}; }
inline Cdd mul(Cdd a, double s) { return mul(a, from(s)); }

}  // namespace h2v::dd
