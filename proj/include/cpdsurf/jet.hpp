#pragma once

#include <cmath>

#include "cpdsurf/errors.hpp"

namespace cpdsurf {

inline constexpr double kDefaultDomainTol = 1e-9;

// Truncated 2-jet in two parameters (s,t): value, first and true second
// partials, propagated by exact Taylor algebra.
struct Jet2 {
  double v = 0.0;
  double ds = 0.0;
  double dt = 0.0;
  double dss = 0.0;
  double dst = 0.0;
  double dtt = 0.0;

  static Jet2 constant(double c) { return {c, 0, 0, 0, 0, 0}; }
  static Jet2 seed_s(double s) { return {s, 1, 0, 0, 0, 0}; }
  static Jet2 seed_t(double t) { return {t, 0, 1, 0, 0, 0}; }
};

inline Jet2 operator+(const Jet2& a, const Jet2& b) {
  return {a.v + b.v, a.ds + b.ds, a.dt + b.dt, a.dss + b.dss, a.dst + b.dst, a.dtt + b.dtt};
}
inline Jet2 operator-(const Jet2& a, const Jet2& b) {
  return {a.v - b.v, a.ds - b.ds, a.dt - b.dt, a.dss - b.dss, a.dst - b.dst, a.dtt - b.dtt};
}
inline Jet2 operator-(const Jet2& a) { return {-a.v, -a.ds, -a.dt, -a.dss, -a.dst, -a.dtt}; }

inline Jet2 operator*(const Jet2& a, const Jet2& b) {
  return {a.v * b.v,
          a.ds * b.v + a.v * b.ds,
          a.dt * b.v + a.v * b.dt,
          a.dss * b.v + 2.0 * a.ds * b.ds + a.v * b.dss,
          a.dst * b.v + a.ds * b.dt + a.dt * b.ds + a.v * b.dst,
          a.dtt * b.v + 2.0 * a.dt * b.dt + a.v * b.dtt};
}

inline Jet2 operator+(const Jet2& a, double c) { return a + Jet2::constant(c); }
inline Jet2 operator+(double c, const Jet2& a) { return a + Jet2::constant(c); }
inline Jet2 operator-(const Jet2& a, double c) { return a - Jet2::constant(c); }
inline Jet2 operator-(double c, const Jet2& a) { return Jet2::constant(c) - a; }
inline Jet2 operator*(const Jet2& a, double c) {
  return {a.v * c, a.ds * c, a.dt * c, a.dss * c, a.dst * c, a.dtt * c};
}
inline Jet2 operator*(double c, const Jet2& a) { return a * c; }

// f(g) via the second-order chain rule; f0=f(g.v), f1=f'(g.v), f2=f''(g.v).
inline Jet2 compose(const Jet2& g, double f0, double f1, double f2) {
  return {f0,
          f1 * g.ds,
          f1 * g.dt,
          f2 * g.ds * g.ds + f1 * g.dss,
          f2 * g.ds * g.dt + f1 * g.dst,
          f2 * g.dt * g.dt + f1 * g.dtt};
}

inline Jet2 inverse(const Jet2& a, double tau_dom = kDefaultDomainTol) {
  if (std::abs(a.v) <= tau_dom) fail(ErrorCode::DomainViolation, "1/x near x=0");
  const double i = 1.0 / a.v;
  return compose(a, i, -i * i, 2.0 * i * i * i);
}

inline Jet2 operator/(const Jet2& a, const Jet2& b) { return a * inverse(b); }
inline Jet2 operator/(const Jet2& a, double c) { return a * (1.0 / c); }
inline Jet2 operator/(double c, const Jet2& a) { return c * inverse(a); }

inline Jet2 sin(const Jet2& a) {
  const double s = std::sin(a.v), c = std::cos(a.v);
  return compose(a, s, c, -s);
}
inline Jet2 cos(const Jet2& a) {
  const double s = std::sin(a.v), c = std::cos(a.v);
  return compose(a, c, -s, -c);
}
inline Jet2 sinh(const Jet2& a) {
  const double s = std::sinh(a.v), c = std::cosh(a.v);
  return compose(a, s, c, s);
}
inline Jet2 cosh(const Jet2& a) {
  const double s = std::sinh(a.v), c = std::cosh(a.v);
  return compose(a, c, s, c);
}
inline Jet2 tanh(const Jet2& a) {
  const double t = std::tanh(a.v), sech2 = 1.0 - t * t;
  return compose(a, t, sech2, -2.0 * t * sech2);
}
inline Jet2 exp(const Jet2& a) {
  const double e = std::exp(a.v);
  return compose(a, e, e, e);
}
inline Jet2 log(const Jet2& a, double tau_dom = kDefaultDomainTol) {
  if (a.v <= tau_dom) fail(ErrorCode::DomainViolation, "log of non-positive argument");
  return compose(a, std::log(a.v), 1.0 / a.v, -1.0 / (a.v * a.v));
}
inline Jet2 sqrt(const Jet2& a, double tau_dom = kDefaultDomainTol) {
  if (a.v <= tau_dom) fail(ErrorCode::DomainViolation, "sqrt of non-positive argument");
  const double r = std::sqrt(a.v);
  return compose(a, r, 0.5 / r, -0.25 / (r * a.v));
}
inline Jet2 asin(const Jet2& a, double tau_dom = kDefaultDomainTol) {
  if (std::abs(a.v) >= 1.0 - tau_dom) fail(ErrorCode::DomainViolation, "asin near |x|=1");
  const double d = 1.0 - a.v * a.v;
  const double f1 = 1.0 / std::sqrt(d);
  return compose(a, std::asin(a.v), f1, a.v * f1 / d);
}
inline Jet2 asinh(const Jet2& a) {
  const double d = 1.0 + a.v * a.v;
  const double f1 = 1.0 / std::sqrt(d);
  return compose(a, std::asinh(a.v), f1, -a.v * f1 / d);
}
inline Jet2 atanh(const Jet2& a, double tau_dom = kDefaultDomainTol) {
  if (std::abs(a.v) >= 1.0 - tau_dom) fail(ErrorCode::DomainViolation, "atanh near |x|=1");
  const double d = 1.0 - a.v * a.v;
  return compose(a, std::atanh(a.v), 1.0 / d, 2.0 * a.v / (d * d));
}
// acot: continuous inverse cotangent onto (0, pi).
inline Jet2 acot(const Jet2& a) {
  const double d = 1.0 + a.v * a.v;
  return compose(a, std::atan2(1.0, a.v), -1.0 / d, 2.0 * a.v / (d * d));
}
// acoth(x) = atanh(1/x), |x| > 1.
inline Jet2 acoth(const Jet2& a, double tau_dom = kDefaultDomainTol) {
  if (std::abs(a.v) <= 1.0 + tau_dom) fail(ErrorCode::DomainViolation, "acoth needs |x|>1");
  const double d = 1.0 - a.v * a.v;  // negative here
  return compose(a, std::atanh(1.0 / a.v), 1.0 / d, 2.0 * a.v / (d * d));
}
inline Jet2 pow(const Jet2& a, double p, double tau_dom = kDefaultDomainTol) {
  if (p == 0.0) return Jet2::constant(1.0);
  if (p == 1.0) return a;
  if (p == 2.0) return a * a;
  if (a.v <= tau_dom) fail(ErrorCode::DomainViolation, "pow with non-positive base");
  const double f0 = std::pow(a.v, p);
  return compose(a, f0, p * f0 / a.v, p * (p - 1.0) * f0 / (a.v * a.v));
}

}  // namespace cpdsurf
