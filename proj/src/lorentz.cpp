#include "cpdsurf/lorentz.hpp"

#include <algorithm>
#include <cmath>

namespace cpdsurf {

const char* to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::ZeroVector: return "ZeroVector";
    case ErrorCode::LightLikeInput: return "LightLikeInput";
    case ErrorCode::MixedTimeOrientation: return "MixedTimeOrientation";
    case ErrorCode::DegenerateSpan: return "DegenerateSpan";
    case ErrorCode::DomainViolation: return "DomainViolation";
    case ErrorCode::OutOfDomain: return "OutOfDomain";
    case ErrorCode::NoConvergence: return "NoConvergence";
    case ErrorCode::DegenerateMetric: return "DegenerateMetric";
    case ErrorCode::LightLikeNormal: return "LightLikeNormal";
    case ErrorCode::NormalDirection: return "NormalDirection";
    case ErrorCode::UnsupportedCausalCombination: return "UnsupportedCausalCombination";
    case ErrorCode::LightLikeU: return "LightLikeU";
    case ErrorCode::LeftDomain: return "LeftDomain";
    case ErrorCode::DegenerateU: return "DegenerateU";
    case ErrorCode::VanishingThetaPrime: return "VanishingThetaPrime";
    case ErrorCode::DegenerateM: return "DegenerateM";
    case ErrorCode::ZeroC: return "ZeroC";
    case ErrorCode::NonpositiveC2: return "NonpositiveC2";
    case ErrorCode::VanishingPhi: return "VanishingPhi";
    case ErrorCode::VanishingPhiPrime: return "VanishingPhiPrime";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::ConfigError: return "ConfigError";
    case ErrorCode::IoError: return "IoError";
  }
  return "UnknownError";
}

const char* to_string(Causality c) noexcept {
  switch (c) {
    case Causality::SpaceLike: return "SpaceLike";
    case Causality::TimeLike: return "TimeLike";
    case Causality::LightLike: return "LightLike";
  }
  return "?";
}

const char* to_string(AngleKind k) noexcept {
  switch (k) {
    case AngleKind::SpacelikePair: return "SpacelikePair";
    case AngleKind::TimelikeSpan: return "TimelikeSpan";
    case AngleKind::TimelikePair: return "TimelikePair";
    case AngleKind::Mixed: return "Mixed";
  }
  return "?";
}

CausalCharacter causal_character(const MinkVec3& v, double tau_causal) {
  const double n2 = euclid_norm2(v);
  if (std::sqrt(n2) <= tau_causal) fail(ErrorCode::ZeroVector, "causal_character of ~0 vector");
  const double q = inner(v, v);
  CausalCharacter out;
  if (q > tau_causal * n2) {
    out.tag = Causality::SpaceLike;
  } else if (q < -tau_causal * n2) {
    out.tag = Causality::TimeLike;
    out.orientation = v.x3 > 0 ? TimeOrientation::FuturePointing : TimeOrientation::PastPointing;
  } else {
    out.tag = Causality::LightLike;
  }
  return out;
}

Normalized normalize(const MinkVec3& v, double tau_causal) {
  const double q = inner(v, v);
  if (std::abs(q) <= tau_causal * std::max(1.0, euclid_norm2(v)))
    fail(ErrorCode::LightLikeInput, "normalize of (near-)light-like vector");
  const double inv = 1.0 / std::sqrt(std::abs(q));
  return {inv * v, q > 0 ? 1 : -1};
}

namespace {
double clamped_acos(double x) { return std::acos(std::clamp(x, -1.0, 1.0)); }
double clamped_acosh(double x) { return std::acosh(std::max(x, 1.0)); }
}  // namespace

LorentzAngle lorentz_angle(const MinkVec3& v, const MinkVec3& w, double tau_causal) {
  const auto cv = causal_character(v, tau_causal);
  const auto cw = causal_character(w, tau_causal);
  if (cv.tag == Causality::LightLike || cw.tag == Causality::LightLike)
    fail(ErrorCode::LightLikeInput, "lorentz_angle requires non-light-like inputs");

  const double qv = inner(v, v);
  const double qw = inner(w, w);
  const double p = inner(v, w);
  const double ratio = std::abs(p) / std::sqrt(std::abs(qv) * std::abs(qw));

  if (cv.tag == Causality::TimeLike && cw.tag == Causality::TimeLike) {
    if (cv.orientation != cw.orientation)
      fail(ErrorCode::MixedTimeOrientation, "time-like pair with opposite orientations");
    return {clamped_acosh(ratio), AngleKind::TimelikePair};
  }
  if (cv.tag == Causality::SpaceLike && cw.tag == Causality::SpaceLike) {
    // Causal type of span{v,w} from the Gram determinant.
    const double gram = qv * qw - p * p;
    if (std::abs(gram) <= tau_causal * qv * qw)
      fail(ErrorCode::DegenerateSpan, "space-like pair spanning a degenerate plane");
    if (gram > 0) return {clamped_acos(ratio), AngleKind::SpacelikePair};
    return {clamped_acosh(ratio), AngleKind::TimelikeSpan};
  }
  // Mixed space-like / time-like pair.
  return {std::asinh(ratio), AngleKind::Mixed};
}

}  // namespace cpdsurf
