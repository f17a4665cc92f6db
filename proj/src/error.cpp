#include "cscf/error.hpp"

namespace cscf
{

std::string_view to_string(ErrorKind kind) noexcept
{
  switch (kind) {
    case ErrorKind::FixedPointSeed: return "FixedPointSeed";
    case ErrorKind::SeedOutOfRange: return "SeedOutOfRange";
    case ErrorKind::DivergedOrbit: return "DivergedOrbit";
    case ErrorKind::NonFiniteResult: return "NonFiniteResult";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::SameAgent: return "SameAgent";
    case ErrorKind::ConfigError: return "ConfigError";
    case ErrorKind::EmptySample: return "EmptySample";
    case ErrorKind::AllZeroDifferences: return "AllZeroDifferences";
    case ErrorKind::TooFewGroups: return "TooFewGroups";
    case ErrorKind::EmptyInput: return "EmptyInput";
    case ErrorKind::IoError: return "IoError";
  }
  return "Unknown";
}

Error::Error(ErrorKind kind, const std::string& message)
  : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind)
{
}

}  // namespace cscf
