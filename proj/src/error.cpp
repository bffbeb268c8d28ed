#include "solchar/error.hpp"

namespace solchar {

const char *to_string(ErrorKind kind) noexcept
{
  switch (kind) {
  case ErrorKind::CapExceeded: return "CapExceeded";
  case ErrorKind::InvalidPermutation: return "InvalidPermutation";
  case ErrorKind::NotPrime: return "NotPrime";
  case ErrorKind::ElementNotInGroup: return "ElementNotInGroup";
  case ErrorKind::NotNormal: return "NotNormal";
  case ErrorKind::NotSubgroup: return "NotSubgroup";
  case ErrorKind::NotChiefFactor: return "NotChiefFactor";
  case ErrorKind::GroupMismatch: return "GroupMismatch";
  case ErrorKind::NotIrreducible: return "NotIrreducible";
  case ErrorKind::LiftFailure: return "LiftFailure";
  case ErrorKind::NotElementaryAbelian: return "NotElementaryAbelian";
  case ErrorKind::SolvabilityHypothesisFailed: return "SolvabilityHypothesisFailed";
  case ErrorKind::PrimeMismatch: return "PrimeMismatch";
  case ErrorKind::HypothesesNotSatisfied: return "HypothesesNotSatisfied";
  case ErrorKind::ResourceCap: return "ResourceCap";
  case ErrorKind::ConfigError: return "ConfigError";
  case ErrorKind::ParseError: return "ParseError";
  case ErrorKind::Overflow: return "Overflow";
  }
  return "Unknown";
}

Error::Error(ErrorKind kind, const std::string &message)
: std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind)
{}

} // namespace solchar
