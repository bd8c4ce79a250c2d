#pragma once

#include <cmath>

#include "cpdsurf/errors.hpp"

namespace cpdsurf {

// Vector of E^3_1 with metric signature (+,+,-); x3 is the time coordinate.
struct MinkVec3 {
  double x1 = 0.0;
  double x2 = 0.0;
  double x3 = 0.0;
};

inline MinkVec3 operator+(const MinkVec3& a, const MinkVec3& b) {
  return {a.x1 + b.x1, a.x2 + b.x2, a.x3 + b.x3};
}
inline MinkVec3 operator-(const MinkVec3& a, const MinkVec3& b) {
  return {a.x1 - b.x1, a.x2 - b.x2, a.x3 - b.x3};
}
inline MinkVec3 operator-(const MinkVec3& a) { return {-a.x1, -a.x2, -a.x3}; }
inline MinkVec3 operator*(double c, const MinkVec3& a) { return {c * a.x1, c * a.x2, c * a.x3}; }
inline MinkVec3 operator*(const MinkVec3& a, double c) { return c * a; }

// <v,w> = v1 w1 + v2 w2 - v3 w3
inline double inner(const MinkVec3& v, const MinkVec3& w) {
  return v.x1 * w.x1 + v.x2 * w.x2 - v.x3 * w.x3;
}

inline double euclid_norm2(const MinkVec3& v) { return v.x1 * v.x1 + v.x2 * v.x2 + v.x3 * v.x3; }
inline double euclid_norm(const MinkVec3& v) { return std::sqrt(euclid_norm2(v)); }

// Unique u with <u,z> = det[z,v,w] for all z. Light-like results are legal.
inline MinkVec3 lorentz_cross(const MinkVec3& v, const MinkVec3& w) {
  return {v.x2 * w.x3 - v.x3 * w.x2,
          v.x3 * w.x1 - v.x1 * w.x3,
          -(v.x1 * w.x2 - v.x2 * w.x1)};
}

enum class Causality { SpaceLike, TimeLike, LightLike };
enum class TimeOrientation { None, FuturePointing, PastPointing };

const char* to_string(Causality c) noexcept;

struct CausalCharacter {
  Causality tag = Causality::LightLike;
  TimeOrientation orientation = TimeOrientation::None;
};

inline constexpr double kDefaultCausalTol = 1e-10;

// Sign of <v,v> against tau*|v|^2_euclid, so the tag is scale-invariant.
CausalCharacter causal_character(const MinkVec3& v, double tau_causal = kDefaultCausalTol);

enum class AngleKind {
  SpacelikePair,  // space-like pair spanning a space-like plane: arccos
  TimelikeSpan,   // space-like pair spanning a time-like plane: arccosh
  TimelikePair,   // time-like pair, matching orientation: arccosh
  Mixed,          // space-like with time-like: arcsinh
};

const char* to_string(AngleKind k) noexcept;

struct LorentzAngle {
  double value = 0.0;
  AngleKind kind = AngleKind::SpacelikePair;
};

// Dispatches on the causal characters of v, w (and of span{v,w} for
// space-like pairs); |<v,w>| = |v||w| * {cos, cosh, sinh}(value).
LorentzAngle lorentz_angle(const MinkVec3& v, const MinkVec3& w,
                           double tau_causal = kDefaultCausalTol);

struct Normalized {
  MinkVec3 unit;
  int sign = 0;  // sign of <v,v>
};

Normalized normalize(const MinkVec3& v, double tau_causal = kDefaultCausalTol);

}  // namespace cpdsurf
