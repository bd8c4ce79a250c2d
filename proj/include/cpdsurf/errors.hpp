#pragma once

#include <stdexcept>
#include <string>

namespace cpdsurf {

enum class ErrorCode {
  ZeroVector,
  LightLikeInput,
  MixedTimeOrientation,
  DegenerateSpan,
  DomainViolation,
  OutOfDomain,
  NoConvergence,
  DegenerateMetric,
  LightLikeNormal,
  NormalDirection,
  UnsupportedCausalCombination,
  LightLikeU,
  LeftDomain,
  DegenerateU,
  VanishingThetaPrime,
  DegenerateM,
  ZeroC,
  NonpositiveC2,
  VanishingPhi,
  VanishingPhiPrime,
  ParseError,
  ConfigError,
  IoError,
};

const char* to_string(ErrorCode code) noexcept;

// Library-wide exception carrying a stable machine-readable code.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) { throw Error(code, what); }

}  // namespace cpdsurf
