#pragma once

#include <stdexcept>
#include <string>

namespace solchar {

enum class ErrorKind {
  CapExceeded,
  InvalidPermutation,
  NotPrime,
  ElementNotInGroup,
  NotNormal,
  NotSubgroup,
  NotChiefFactor,
  GroupMismatch,
  NotIrreducible,
  LiftFailure,
  NotElementaryAbelian,
  SolvabilityHypothesisFailed,
  PrimeMismatch,
  HypothesesNotSatisfied,
  ResourceCap,
  ConfigError,
  ParseError,
  Overflow,
};

const char *to_string(ErrorKind kind) noexcept;

/// The single exception type thrown by the library. `kind()` identifies the
/// failure class; `what()` carries a human readable description.
class Error : public std::runtime_error {
public:
  Error(ErrorKind kind, const std::string &message);

  ErrorKind kind() const noexcept { return kind_; }

private:
  ErrorKind kind_;
};

} // namespace solchar
