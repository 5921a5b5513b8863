#include "groupcodes/error.hpp"

namespace groupcodes {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kOddDegree: return "OddDegree";
    case ErrorKind::kDivisionByZero: return "DivisionByZero";
    case ErrorKind::kTooLarge: return "TooLarge";
    case ErrorKind::kMixedAmbient: return "MixedAmbient";
    case ErrorKind::kLengthMismatch: return "LengthMismatch";
    case ErrorKind::kNotKLinear: return "NotKLinear";
    case ErrorKind::kNotComplementary: return "NotComplementary";
    case ErrorKind::kNotSubmodule: return "NotSubmodule";
    case ErrorKind::kNotProjector: return "NotProjector";
    case ErrorKind::kNotIdempotent: return "NotIdempotent";
    case ErrorKind::kTooLargeToEnumerate: return "TooLargeToEnumerate";
    case ErrorKind::kParseError: return "ParseError";
    case ErrorKind::kInvalidArgument: return "InvalidArgument";
    case ErrorKind::kCrossCheckFailed: return "CrossCheckFailed";
  }
  return "Unknown";
}

}  // namespace groupcodes
