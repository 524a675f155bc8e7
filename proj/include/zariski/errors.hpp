#pragma once

#include <stdexcept>
#include <string>

namespace zariski {

enum class ErrorKind {
  ZeroInput,
  ZeroMatrix,
  ZeroEigenvalue,
  DimensionMismatch,
  DimensionTooLarge,
  RingMismatch,
  NotSquare,
  NotUnipotent,
  SingularInput,
  SingularInverse,
  EigenvaluesNotRational,
  GroupModeOnSingular,
  BudgetExceeded,
  ParseError,
};

inline const char* error_kind_name(ErrorKind k) {
  switch (k) {
    case ErrorKind::ZeroInput: return "ZeroInput";
    case ErrorKind::ZeroMatrix: return "ZeroMatrix";
    case ErrorKind::ZeroEigenvalue: return "ZeroEigenvalue";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::DimensionTooLarge: return "DimensionTooLarge";
    case ErrorKind::RingMismatch: return "RingMismatch";
    case ErrorKind::NotSquare: return "NotSquare";
    case ErrorKind::NotUnipotent: return "NotUnipotent";
    case ErrorKind::SingularInput: return "SingularInput";
    case ErrorKind::SingularInverse: return "SingularInverse";
    case ErrorKind::EigenvaluesNotRational: return "EigenvaluesNotRational";
    case ErrorKind::GroupModeOnSingular: return "GroupModeOnSingular";
    case ErrorKind::BudgetExceeded: return "BudgetExceeded";
    case ErrorKind::ParseError: return "ParseError";
  }
  return "Unknown";
}

class MathError : public std::runtime_error {
 public:
  MathError(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(error_kind_name(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& msg) { throw MathError(kind, msg); }

}  // namespace zariski
