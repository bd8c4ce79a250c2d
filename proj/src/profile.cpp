#include "cpdsurf/profile.hpp"

#include <cmath>
#include <sstream>

namespace cpdsurf::profiles {

namespace {
std::string fmt(double x) {
  std::ostringstream os;
  os << x;
  return os.str();
}
}  // namespace

ProfileFn constant(double c) {
  return {fmt(c), [c](const Jet2&) { return Jet2::constant(c); }};
}

ProfileFn affine(double a, double b) {
  std::string name = fmt(a) + (b >= 0 ? "+" : "-") + fmt(std::abs(b)) + "*u";
  return {std::move(name), [a, b](const Jet2& u) { return a + b * u; }};
}

ProfileFn atanh_neg_scaled(double c) {
  return {"atanh(-" + fmt(c) + "*u)", [c](const Jet2& u) { return atanh((-c) * u); }};
}

ProfileFn acot_scaled(double c) {
  return {"acot(" + fmt(c) + "*u)", [c](const Jet2& u) { return acot(c * u); }};
}

ProfileFn acoth_scaled(double c) {
  return {"acoth(" + fmt(c) + "*u)", [c](const Jet2& u) { return acoth(c * u); }};
}

}  // namespace cpdsurf::profiles
