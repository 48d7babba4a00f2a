#pragma once

#include <stdexcept>
#include <string>

namespace ruelle {

/// Coarse error families. The CLI maps them onto exit codes 2, 3 and 4.
enum class ErrorFamily {
  Validation,  // malformed input, violated type invariant
  MathDomain,  // well-formed input outside a mathematical precondition
  Tolerance,   // internal numerical tolerance could not be met
};

enum class ErrorCode {
  // Validation
  Parse,
  UnknownGenerator,
  EmptyRelator,
  WirtingerViolation,
  IndexOutOfRange,
  RankMismatch,
  NotUnitary,
  NotRepresentation,
  ShapeMismatch,
  InvalidLattice,
  InvalidSpectrum,
  InvalidShape,
  // Mathematical preconditions
  CuspidalityViolation,
  NonAcyclic,
  AllColumnsSingular,
  ZeroDelta1,
  SingularPeriodMatrix,
  // Numerical
  IllConditioned,
  NonconvergentTheta,
  QuadratureFailure,
};

ErrorFamily family_of(ErrorCode code);
const char* to_string(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }
  ErrorFamily family() const noexcept { return family_of(code_); }

 private:
  ErrorCode code_;
};

}  // namespace ruelle
