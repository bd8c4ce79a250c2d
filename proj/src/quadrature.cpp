#include "cpdsurf/quadrature.hpp"

#include <algorithm>
#include <cmath>

#include "cpdsurf/errors.hpp"

namespace cpdsurf {

namespace {

double simpson(double fa, double fm, double fb, double h) { return h / 6.0 * (fa + 4.0 * fm + fb); }

double adapt(const std::function<double(double)>& f, double a, double b, double fa, double fm,
             double fb, double whole, double tol, int depth) {
  const double m = 0.5 * (a + b);
  const double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
  const double flm = f(lm), frm = f(rm);
  const double left = simpson(fa, flm, fm, m - a);
  const double right = simpson(fm, frm, fb, b - m);
  const double delta = left + right - whole;
  if (std::abs(delta) <= 15.0 * tol || (b - a) < 1e-14 * (1.0 + std::abs(a)))
    return left + right + delta / 15.0;
  if (depth <= 0) fail(ErrorCode::NoConvergence, "adaptive quadrature exceeded max subdivisions");
  return adapt(f, a, m, fa, flm, fm, left, 0.5 * tol, depth - 1) +
         adapt(f, m, b, fm, frm, fb, right, 0.5 * tol, depth - 1);
}

}  // namespace

double integrate(const std::function<double(double)>& f, double a, double b, double tol) {
  if (a == b) return 0.0;
  const double fa = f(a), fb = f(b), fm = f(0.5 * (a + b));
  const double whole = simpson(fa, fm, fb, b - a);
  return adapt(f, a, b, fa, fm, fb, whole, std::max(tol, 1e-15), 48);
}

CumulativeIntegral::CumulativeIntegral(std::function<Jet2(double)> integrand, double anchor,
                                       double lo, double hi, int nodes, double tol)
    : integrand_(std::move(integrand)), anchor_(anchor), lo_(lo), hi_(hi), tol_(tol) {
  nodes = std::max(nodes, 2);
  step_ = (hi_ - lo_) / (nodes - 1);
  table_.resize(static_cast<size_t>(nodes));
  table_[0] = 0.0;
  auto plain = [this](double u) { return integrand_(u).v; };
  for (int i = 1; i < nodes; ++i) {
    const double a = lo_ + (i - 1) * step_;
    const double b = lo_ + i * step_;
    table_[static_cast<size_t>(i)] = table_[static_cast<size_t>(i - 1)] + integrate(plain, a, b, tol_);
  }
  anchor_prefix_ = 0.0;  // prefix() uses it, so set before the call
  anchor_prefix_ = prefix(anchor_);
}

double CumulativeIntegral::prefix(double s) const {
  const int n = static_cast<int>(table_.size());
  int i = static_cast<int>(std::floor((s - lo_) / step_));
  i = std::clamp(i, 0, n - 1);
  const double node = lo_ + i * step_;
  auto plain = [this](double u) { return integrand_(u).v; };
  return table_[static_cast<size_t>(i)] + integrate(plain, node, s, tol_);
}

double CumulativeIntegral::value(double s) const { return prefix(s) - anchor_prefix_; }

Jet2 CumulativeIntegral::at(const Jet2& u) const {
  const Jet2 f = integrand_(u.v);
  return compose(u, value(u.v), f.v, f.ds);
}

}  // namespace cpdsurf
