#include "renyi/error.hpp"

namespace renyi {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::NotHermitian: return "NotHermitian";
    case ErrorCode::NotPSD: return "NotPSD";
    case ErrorCode::TraceNotOne: return "TraceNotOne";
    case ErrorCode::SupportViolation: return "SupportViolation";
    case ErrorCode::NegativeBase: return "NegativeBase";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::CutoffViolation: return "CutoffViolation";
    case ErrorCode::NoConvergence: return "NoConvergence";
    case ErrorCode::InfeasibleConstraint: return "InfeasibleConstraint";
    case ErrorCode::MultipleRoots: return "MultipleRoots";
    case ErrorCode::NoBracket: return "NoBracket";
    case ErrorCode::NonMonotone: return "NonMonotone";
    case ErrorCode::CycleNotClosed: return "CycleNotClosed";
    case ErrorCode::FixedPointMismatch: return "FixedPointMismatch";
    case ErrorCode::NotTracePreserving: return "NotTracePreserving";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::ConfigError: return "ConfigError";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& message)
    : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

}  // namespace renyi
