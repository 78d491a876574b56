#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace pgcurve {

enum class ErrorCode {
  DomainEmpty,
  StepTooSmall,
  DomainTooNarrow,
  EmptyGrid,
  OutOfDomain,
  Inadmissible,
  IsotropicTangent,
  NotArcLength,
  JetOrderTooLow,
  Q1Lightlike,
  MateInadmissible,
  UnknownName,
  ParamConstraintViolated,
  InvalidArgument,
};

std::string_view to_string(ErrorCode code) noexcept;

/// Exception carrying a machine-readable code and, for pointwise failures,
/// the curve parameter at which the failure was detected.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message,
        std::optional<double> param = std::nullopt);

  [[nodiscard]] ErrorCode code() const noexcept { return code_; }
  [[nodiscard]] std::optional<double> param() const noexcept { return param_; }

 private:
  ErrorCode code_;
  std::optional<double> param_;
};

}  // namespace pgcurve
