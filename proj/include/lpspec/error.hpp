#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace lpspec {

/// Failure classes raised by the library. The CLI maps each onto a fixed
/// exit code, see `exit_code_for`.
enum class ErrorCode {
  OutOfDomain,
  StepTooLarge,
  Overflow,
  TailNotNegligible,
  DegreeNotCanonical,
  MiddleDegreeUnsupported,
  GridTooCoarse,
  InvalidInterval,
  WeightMismatch,
  ModeMismatch,
  NotDecaying,
  BreakpointMisaligned,
  WindowTooShort,
  QuadratureFailure,
  InvalidArgument,
  ConfigError,
  IoError,
};

std::string_view to_string(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

/// 0 ok, 2 config, 3 domain guard, 4 decay failure, 5 numeric failure, 6 I/O.
int exit_code_for(ErrorCode code) noexcept;

}  // namespace lpspec
