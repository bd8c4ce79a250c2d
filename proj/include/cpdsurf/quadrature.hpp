#pragma once

#include <functional>
#include <memory>
#include <vector>

#include "cpdsurf/jet.hpp"

namespace cpdsurf {

// Adaptive Simpson estimate of the integral of f over [a,b] with absolute
// error <= tol. Exact on polynomials of degree <= 3 by construction.
double integrate(const std::function<double(double)>& f, double a, double b, double tol = 1e-12);

// Eagerly built prefix table of I(s) = int_{anchor}^{s} f over [lo, hi];
// immutable after construction, so queries are safe in parallel. A query
// completes from the nearest node by quadrature, and the jet query gets its
// derivatives analytically from the integrand (I' = f, I'' = f').
class CumulativeIntegral {
 public:
  // integrand(u) returns f as an s-seeded 1-variable jet: {f, f', f''}.
  CumulativeIntegral(std::function<Jet2(double)> integrand, double anchor, double lo, double hi,
                     int nodes = 257, double tol = 1e-13);

  double value(double s) const;

  // I composed with an arbitrary inner jet u (chain rule through f').
  Jet2 at(const Jet2& u) const;

  double anchor() const { return anchor_; }

 private:
  double prefix(double s) const;

  std::function<Jet2(double)> integrand_;
  double anchor_, lo_, hi_, step_, tol_, anchor_prefix_;
  std::vector<double> table_;  // prefix integrals from lo_ at uniform nodes
};

using CumulativeIntegralPtr = std::shared_ptr<const CumulativeIntegral>;

}  // namespace cpdsurf
