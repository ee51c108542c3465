#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace planechar {

enum class ErrorCode {
  Empty,
  NotNonincreasing,
  TailBelowLength,
  WindowTooSmall,
  NoGapAtT,
  InvalidBetti,
  NegativeDimension,
  NotACharacter,
  NotRealizable,
  DegreeMismatch,
  RankClaimViolated,
  NotStabilized,
  UnexpectedDepth,
  ParseError,
  Overflow,
  DivisionByZero,
};

std::string_view to_string(ErrorCode code) noexcept;

// Every failure raised by the library carries a machine-readable code so the
// CLI can map it onto an exit status and a stable diagnostic name.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(to_string(code)) + ": " + message),
        code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace planechar
