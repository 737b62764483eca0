#include "lpspec/error.hpp"

namespace lpspec {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::OutOfDomain: return "OutOfDomain";
    case ErrorCode::StepTooLarge: return "StepTooLarge";
    case ErrorCode::Overflow: return "Overflow";
    case ErrorCode::TailNotNegligible: return "TailNotNegligible";
    case ErrorCode::DegreeNotCanonical: return "DegreeNotCanonical";
    case ErrorCode::MiddleDegreeUnsupported: return "MiddleDegreeUnsupported";
    case ErrorCode::GridTooCoarse: return "GridTooCoarse";
    case ErrorCode::InvalidInterval: return "InvalidInterval";
    case ErrorCode::WeightMismatch: return "WeightMismatch";
    case ErrorCode::ModeMismatch: return "ModeMismatch";
    case ErrorCode::NotDecaying: return "NotDecaying";
    case ErrorCode::BreakpointMisaligned: return "BreakpointMisaligned";
    case ErrorCode::WindowTooShort: return "WindowTooShort";
    case ErrorCode::QuadratureFailure: return "QuadratureFailure";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::ConfigError: return "ConfigError";
    case ErrorCode::IoError: return "IoError";
  }
  return "Unknown";
}

int exit_code_for(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::ConfigError:
    case ErrorCode::InvalidArgument:
      return 2;
    case ErrorCode::OutOfDomain:
    case ErrorCode::DegreeNotCanonical:
    case ErrorCode::MiddleDegreeUnsupported:
    case ErrorCode::InvalidInterval:
    case ErrorCode::WeightMismatch:
    case ErrorCode::ModeMismatch:
    case ErrorCode::BreakpointMisaligned:
    case ErrorCode::WindowTooShort:
    case ErrorCode::GridTooCoarse:
      return 3;
    case ErrorCode::NotDecaying:
      return 4;
    case ErrorCode::StepTooLarge:
    case ErrorCode::Overflow:
    case ErrorCode::TailNotNegligible:
    case ErrorCode::QuadratureFailure:
      return 5;
    case ErrorCode::IoError:
      return 6;
  }
  return 5;
}

}  // namespace lpspec
