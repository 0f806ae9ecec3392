#include "arthur/error.hpp"

namespace arthur {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::InvalidInput: return "InvalidInput";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::NotAdmissible: return "NotAdmissible";
    case ErrorKind::Incomparable: return "Incomparable";
    case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorKind::OrderNotAdmissible: return "OrderNotAdmissible";
    case ErrorKind::OrderNotPPrime: return "OrderNotPPrime";
    case ErrorKind::NegativeCenter: return "NegativeCenter";
    case ErrorKind::BadParity: return "BadParity";
    case ErrorKind::SignConditionFailed: return "SignConditionFailed";
    case ErrorKind::EndpointMismatch: return "EndpointMismatch";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::UnknownCuspidal: return "UnknownCuspidal";
    case ErrorKind::MissingRow: return "MissingRow";
    case ErrorKind::PreconditionFailed: return "PreconditionFailed";
    case ErrorKind::ContainsSummand: return "ContainsSummand";
    case ErrorKind::CapExceeded: return "CapExceeded";
    case ErrorKind::NoCanonical: return "NoCanonical";
    case ErrorKind::NotUnique: return "NotUnique";
    case ErrorKind::IntervalViolation: return "IntervalViolation";
    case ErrorKind::Internal: return "Internal";
  }
  return "Internal";
}

Error::Error(ErrorKind kind, const std::string& message, std::string path)
    : std::runtime_error(message), kind_(kind), path_(std::move(path)) {}

Error Error::nested(std::string_view prefix) const {
  return Error(kind_, what(), std::string(prefix) + path_);
}

bool is_internal(ErrorKind kind) noexcept {
  return kind == ErrorKind::IntervalViolation || kind == ErrorKind::NoCanonical ||
         kind == ErrorKind::NotUnique || kind == ErrorKind::Internal;
}

}  // namespace arthur
