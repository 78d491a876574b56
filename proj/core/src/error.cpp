#include "pgcurve/error.hpp"

namespace pgcurve {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::DomainEmpty: return "DomainEmpty";
    case ErrorCode::StepTooSmall: return "StepTooSmall";
    case ErrorCode::DomainTooNarrow: return "DomainTooNarrow";
    case ErrorCode::EmptyGrid: return "EmptyGrid";
    case ErrorCode::OutOfDomain: return "OutOfDomain";
    case ErrorCode::Inadmissible: return "Inadmissible";
    case ErrorCode::IsotropicTangent: return "IsotropicTangent";
    case ErrorCode::NotArcLength: return "NotArcLength";
    case ErrorCode::JetOrderTooLow: return "JetOrderTooLow";
    case ErrorCode::Q1Lightlike: return "Q1Lightlike";
    case ErrorCode::MateInadmissible: return "MateInadmissible";
    case ErrorCode::UnknownName: return "UnknownName";
    case ErrorCode::ParamConstraintViolated: return "ParamConstraintViolated";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& message,
             std::optional<double> param)
    : std::runtime_error(std::string(to_string(code)) + ": " + message),
      code_(code),
      param_(param) {}

}  // namespace pgcurve
