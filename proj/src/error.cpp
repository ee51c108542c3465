#include "planechar/error.hpp"

namespace planechar {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::Empty: return "Empty";
    case ErrorCode::NotNonincreasing: return "NotNonincreasing";
    case ErrorCode::TailBelowLength: return "TailBelowLength";
    case ErrorCode::WindowTooSmall: return "WindowTooSmall";
    case ErrorCode::NoGapAtT: return "NoGapAtT";
    case ErrorCode::InvalidBetti: return "InvalidBetti";
    case ErrorCode::NegativeDimension: return "NegativeDimension";
    case ErrorCode::NotACharacter: return "NotACharacter";
    case ErrorCode::NotRealizable: return "NotRealizable";
    case ErrorCode::DegreeMismatch: return "DegreeMismatch";
    case ErrorCode::RankClaimViolated: return "RankClaimViolated";
    case ErrorCode::NotStabilized: return "NotStabilized";
    case ErrorCode::UnexpectedDepth: return "UnexpectedDepth";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::Overflow: return "Overflow";
    case ErrorCode::DivisionByZero: return "DivisionByZero";
  }
  return "Unknown";
}

}  // namespace planechar
