#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace qrf {

enum class ErrorKind {
  NotPowerOfTwo,
  NormOutOfTolerance,
  EmptyKeepSet,
  InvalidSubsystem,
  NotDiagonal,
  InvalidBipartition,
  TooFewQubits,
  DimensionMismatch,
  WrongQubitCount,
  NonPositiveInput,
  UnknownQuantity,
  GridOutOfDomain,
  Io,
  Parse,
  Config,
};

std::string_view to_string(ErrorKind kind) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace qrf
