#ifndef QPHASE_DDOUBLE_HPP
#define QPHASE_DDOUBLE_HPP

#include <cmath>

namespace qphase {

// Double-double value (~31 significant digits), used where alternating sums
// cancel far below the double mantissa.
struct DDouble {
  double hi = 0.0;
  double lo = 0.0;

  DDouble() = default;
  DDouble(double h) : hi(h), lo(0.0) {}
  DDouble(double h, double l) : hi(h), lo(l) {}

  explicit operator double() const { return hi + lo; }
};

namespace detail {

inline DDouble two_sum(double a, double b) {
  double s = a + b;
  double bb = s - a;
  return {s, (a - (s - bb)) + (b - bb)};
}

// requires |a| >= |b|
inline DDouble quick_two_sum(double a, double b) {
  double s = a + b;
  return {s, b - (s - a)};
}

inline DDouble two_prod(double a, double b) {
  double p = a * b;
  return {p, std::fma(a, b, -p)};
}

}  // namespace detail

inline DDouble operator+(DDouble a, DDouble b) {
  DDouble s = detail::two_sum(a.hi, b.hi);
  DDouble t = detail::two_sum(a.lo, b.lo);
  s.lo += t.hi;
  s = detail::quick_two_sum(s.hi, s.lo);
  s.lo += t.lo;
  return detail::quick_two_sum(s.hi, s.lo);
}

inline DDouble operator-(DDouble a) { return {-a.hi, -a.lo}; }
inline DDouble operator-(DDouble a, DDouble b) { return a + (-b); }

inline DDouble operator*(DDouble a, DDouble b) {
  DDouble p = detail::two_prod(a.hi, b.hi);
  p.lo += a.hi * b.lo + a.lo * b.hi;
  return detail::quick_two_sum(p.hi, p.lo);
}

inline DDouble operator/(DDouble a, DDouble b) {
  double q1 = a.hi / b.hi;
  DDouble r = a - DDouble(q1) * b;
  double q2 = r.hi / b.hi;
  r = r - DDouble(q2) * b;
  double q3 = r.hi / b.hi;
  DDouble q = detail::quick_two_sum(q1, q2);
  return q + DDouble(q3);
}

inline DDouble& operator+=(DDouble& a, DDouble b) { return a = a + b; }
inline DDouble& operator-=(DDouble& a, DDouble b) { return a = a - b; }
inline DDouble& operator*=(DDouble& a, DDouble b) { return a = a * b; }
inline DDouble& operator/=(DDouble& a, DDouble b) { return a = a / b; }

inline double to_double(DDouble a) { return a.hi + a.lo; }
inline DDouble fabs(DDouble a) { return a.hi < 0.0 ? -a : a; }

}  // namespace qphase

#endif
