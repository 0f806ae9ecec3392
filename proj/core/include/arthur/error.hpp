#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace arthur {

enum class ErrorKind {
  InvalidInput,
  ParseError,
  NotAdmissible,
  Incomparable,
  IndexOutOfRange,
  OrderNotAdmissible,
  OrderNotPPrime,
  NegativeCenter,
  BadParity,
  SignConditionFailed,
  EndpointMismatch,
  DimensionMismatch,
  UnknownCuspidal,
  MissingRow,
  PreconditionFailed,
  ContainsSummand,
  CapExceeded,
  NoCanonical,
  NotUnique,
  IntervalViolation,
  Internal,
};

std::string_view to_string(ErrorKind kind) noexcept;

// Thrown by every library operation. `path` is a JSON-pointer-like location
// when the error can be attributed to part of an input document.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message, std::string path = {});

  ErrorKind kind() const noexcept { return kind_; }
  const std::string& path() const noexcept { return path_; }

  // Same error, with `prefix` prepended to the path.
  Error nested(std::string_view prefix) const;

 private:
  ErrorKind kind_;
  std::string path_;
};

// True for kinds that indicate a broken invariant rather than bad input.
bool is_internal(ErrorKind kind) noexcept;

}  // namespace arthur
