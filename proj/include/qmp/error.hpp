#pragma once

#include <stdexcept>
#include <string>

namespace qmp {

enum class ErrorKind {
  BetaExponent,
  BetaDegreeExceeded,
  NonReducible,
  FamilyMismatch,
  NonInvertibleEntry,
  UnsupportedTransform,
  NonUnitScalar,
  UnsupportedFamily,
  CorrespondenceBroken,
};

inline const char* name(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::BetaExponent: return "BetaExponent";
    case ErrorKind::BetaDegreeExceeded: return "BetaDegreeExceeded";
    case ErrorKind::NonReducible: return "NonReducible";
    case ErrorKind::FamilyMismatch: return "FamilyMismatch";
    case ErrorKind::NonInvertibleEntry: return "NonInvertibleEntry";
    case ErrorKind::UnsupportedTransform: return "UnsupportedTransform";
    case ErrorKind::NonUnitScalar: return "NonUnitScalar";
    case ErrorKind::UnsupportedFamily: return "UnsupportedFamily";
    case ErrorKind::CorrespondenceBroken: return "CorrespondenceBroken";
  }
  return "Unknown";
}

/// Raised by the algebra engines; `kind()` identifies the failure class.
class AlgebraError : public std::runtime_error {
 public:
  AlgebraError(ErrorKind kind, const std::string& detail)
      : std::runtime_error(std::string(name(kind)) + ": " + detail), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace qmp
