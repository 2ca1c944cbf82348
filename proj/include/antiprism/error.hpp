#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace antiprism {

enum class ErrorCode {
  InvalidArgument,
  PointOutsideModel,
  NumericalBreakdown,
  DegenerateTriple,
  NotAPlane,
  NotRealizable,
  InternalInvariantViolation,
  SingularR,
  OutOfDomain,
  ConvergenceFailure,
  OverflowGuard,
};

constexpr std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::PointOutsideModel: return "PointOutsideModel";
    case ErrorCode::NumericalBreakdown: return "NumericalBreakdown";
    case ErrorCode::DegenerateTriple: return "DegenerateTriple";
    case ErrorCode::NotAPlane: return "NotAPlane";
    case ErrorCode::NotRealizable: return "NotRealizable";
    case ErrorCode::InternalInvariantViolation: return "InternalInvariantViolation";
    case ErrorCode::SingularR: return "SingularR";
    case ErrorCode::OutOfDomain: return "OutOfDomain";
    case ErrorCode::ConvergenceFailure: return "ConvergenceFailure";
    case ErrorCode::OverflowGuard: return "OverflowGuard";
  }
  return "Unknown";
}

/// Every failure raised by the library carries one of the codes above so
/// callers (the CLI in particular) can map it to an exit status.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace antiprism
