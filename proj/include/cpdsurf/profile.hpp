#pragma once

#include <functional>
#include <string>
#include <utility>

#include "cpdsurf/jet.hpp"

namespace cpdsurf {

// Scalar function of one variable with first and second derivatives, used for
// the catalog profiles theta(s), Psi(t), gamma0(t), b(t), phi(s).
class ProfileFn {
 public:
  ProfileFn() = default;
  ProfileFn(std::string name, std::function<Jet2(const Jet2&)> fn)
      : name_(std::move(name)), fn_(std::move(fn)) {}

  // Evaluate on an arbitrary jet (typically a seeded parameter).
  Jet2 operator()(const Jet2& u) const { return fn_(u); }

  // Value / first / second derivative at a plain point.
  Jet2 jet_at(double u) const { return fn_(Jet2::seed_s(u)); }
  double value(double u) const { return jet_at(u).v; }
  double d1(double u) const { return jet_at(u).ds; }
  double d2(double u) const { return jet_at(u).dss; }

  const std::string& name() const { return name_; }
  bool valid() const { return static_cast<bool>(fn_); }

 private:
  std::string name_;
  std::function<Jet2(const Jet2&)> fn_;
};

namespace profiles {

ProfileFn constant(double c);
ProfileFn affine(double a, double b);      // a + b*u
ProfileFn atanh_neg_scaled(double c);      // tanh^{-1}(-c*u)
ProfileFn acot_scaled(double c);           // cot^{-1}(c*u), range (0, pi)
ProfileFn acoth_scaled(double c);          // coth^{-1}(c*u), |c*u| > 1

}  // namespace profiles

}  // namespace cpdsurf
