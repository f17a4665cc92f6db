#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace cscf
{

enum class ErrorKind
{
  FixedPointSeed,
  SeedOutOfRange,
  DivergedOrbit,
  NonFiniteResult,
  DimensionMismatch,
  SameAgent,
  ConfigError,
  EmptySample,
  AllZeroDifferences,
  TooFewGroups,
  EmptyInput,
  IoError,
};

std::string_view to_string(ErrorKind kind) noexcept;

/// Every failure raised by the library carries one of the kinds above so
/// callers (and the CLI's exit-status mapping) can dispatch without parsing
/// the message.
class Error : public std::runtime_error
{
public:
  Error(ErrorKind kind, const std::string& message);

  [[nodiscard]] ErrorKind kind() const noexcept { return kind_; }

private:
  ErrorKind kind_;
};

}  // namespace cscf
