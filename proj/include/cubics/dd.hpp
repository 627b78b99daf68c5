#pragma once

// Double-double (~31 significant digits) real and complex arithmetic.
// Error-free transformations follow the classic QD/Bailey algorithms;
// only the operations needed by the orbit evaluators are provided.

#include <cmath>
#include <complex>

namespace cubics {

struct dd {
  double hi = 0.0;
  double lo = 0.0;

  dd() = default;
  dd(double h) : hi(h) {}
  dd(double h, double l) : hi(h), lo(l) {}
};

namespace detail {
inline dd quick_two_sum(double a, double b) {
  double s = a + b;
  return dd(s, b - (s - a));
}
inline dd two_sum(double a, double b) {
  double s = a + b;
  double bb = s - a;
  return dd(s, (a - (s - bb)) + (b - bb));
}
inline dd two_prod(double a, double b) {
  double p = a * b;
  return dd(p, std::fma(a, b, -p));
}
}  // namespace detail

inline dd operator+(dd a, dd b) {
  dd s = detail::two_sum(a.hi, b.hi);
  s.lo += a.lo + b.lo;
  return detail::quick_two_sum(s.hi, s.lo);
}

inline dd operator-(dd a) { return dd(-a.hi, -a.lo); }
inline dd operator-(dd a, dd b) { return a + (-b); }

inline dd operator*(dd a, dd b) {
  dd p = detail::two_prod(a.hi, b.hi);
  p.lo += a.hi * b.lo + a.lo * b.hi;
  return detail::quick_two_sum(p.hi, p.lo);
}

inline dd operator/(dd a, dd b) {
  double q1 = a.hi / b.hi;
  dd r = a - b * dd(q1);
  double q2 = r.hi / b.hi;
  r = r - b * dd(q2);
  double q3 = r.hi / b.hi;
  dd q = detail::quick_two_sum(q1, q2);
  return q + dd(q3);
}

inline bool operator<(dd a, dd b) { return a.hi < b.hi || (a.hi == b.hi && a.lo < b.lo); }

inline double to_double(dd a) { return a.hi + a.lo; }

inline dd sqrt(dd a) {
  if (a.hi <= 0.0) return dd(0.0);
  dd s(std::sqrt(a.hi));
  // one dd Newton step from the double estimate
  s = (s + a / s) * dd(0.5);
  return s;
}

struct cdd {
  dd re, im;

  cdd() = default;
  cdd(dd r) : re(r) {}
  cdd(dd r, dd i) : re(r), im(i) {}
  cdd(std::complex<double> c) : re(c.real()), im(c.imag()) {}
};

inline cdd operator+(cdd a, cdd b) { return cdd(a.re + b.re, a.im + b.im); }
inline cdd operator-(cdd a, cdd b) { return cdd(a.re - b.re, a.im - b.im); }
inline cdd operator-(cdd a) { return cdd(-a.re, -a.im); }
inline cdd operator*(cdd a, cdd b) {
  return cdd(a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re);
}
inline cdd operator/(cdd a, cdd b) {
  dd n = b.re * b.re + b.im * b.im;
  return cdd((a.re * b.re + a.im * b.im) / n, (a.im * b.re - a.re * b.im) / n);
}

inline dd norm_sq(cdd a) { return a.re * a.re + a.im * a.im; }
inline dd abs(cdd a) { return sqrt(norm_sq(a)); }
inline std::complex<double> to_complex(cdd a) { return {to_double(a.re), to_double(a.im)}; }

}  // namespace cubics
