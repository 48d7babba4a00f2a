#include "ruelle/errors.hpp"

namespace ruelle {

ErrorFamily family_of(ErrorCode code) {
  switch (code) {
    case ErrorCode::CuspidalityViolation:
    case ErrorCode::NonAcyclic:
    case ErrorCode::AllColumnsSingular:
    case ErrorCode::ZeroDelta1:
    case ErrorCode::SingularPeriodMatrix:
      return ErrorFamily::MathDomain;
    case ErrorCode::IllConditioned:
    case ErrorCode::NonconvergentTheta:
    case ErrorCode::QuadratureFailure:
      return ErrorFamily::Tolerance;
    default:
      return ErrorFamily::Validation;
  }
}

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::Parse: return "ParseError";
    case ErrorCode::UnknownGenerator: return "UnknownGenerator";
    case ErrorCode::EmptyRelator: return "EmptyRelator";
    case ErrorCode::WirtingerViolation: return "WirtingerViolation";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::RankMismatch: return "RankMismatch";
    case ErrorCode::NotUnitary: return "NotUnitary";
    case ErrorCode::NotRepresentation: return "NotRepresentation";
    case ErrorCode::ShapeMismatch: return "ShapeMismatch";
    case ErrorCode::InvalidLattice: return "InvalidLattice";
    case ErrorCode::InvalidSpectrum: return "InvalidSpectrum";
    case ErrorCode::InvalidShape: return "InvalidShape";
    case ErrorCode::CuspidalityViolation: return "CuspidalityViolation";
    case ErrorCode::NonAcyclic: return "NonAcyclic";
    case ErrorCode::AllColumnsSingular: return "AllColumnsSingular";
    case ErrorCode::ZeroDelta1: return "ZeroDelta1";
    case ErrorCode::SingularPeriodMatrix: return "SingularPeriodMatrix";
    case ErrorCode::IllConditioned: return "IllConditioned";
    case ErrorCode::NonconvergentTheta: return "NonconvergentTheta";
    case ErrorCode::QuadratureFailure: return "QuadratureFailure";
  }
  return "Unknown";
}

}  // namespace ruelle
