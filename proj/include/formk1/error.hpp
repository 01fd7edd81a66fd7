#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace formk1 {

enum class ErrorKind {
  ParseError,
  Undecidable,
  NotAUnit,
  DimensionMismatch,
  BadParameter,
  ParameterNotInIdeal,
  PreconditionFailed,
  NotInvertible,
  NotHermitian,
  ConstraintViolated,
  NotCongruent,
  MalformedWord,
  NotQuadratic,
  ConditionViolated,
  NotNilpotent,
  KNotInvertible,
  HypothesisFailed,
  DegreeError,
  InvariantViolated,
};

std::string_view error_kind_name(ErrorKind kind);

/// Library error. `detail` carries a small integer payload where the kind
/// needs one (the failing condition index for ConditionViolated).
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message, int detail = 0)
      : std::runtime_error(message), kind_(kind), detail_(detail) {}

  ErrorKind kind() const noexcept { return kind_; }
  int detail() const noexcept { return detail_; }

 private:
  ErrorKind kind_;
  int detail_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& message, int detail = 0) {
  throw Error(kind, message, detail);
}

}  // namespace formk1
