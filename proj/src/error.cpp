#include "substkit/error.hpp"

namespace substkit {

std::string_view error_name(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::EmptyAlphabet: return "EmptyAlphabet";
    case ErrorCode::DuplicateSymbol: return "DuplicateSymbol";
    case ErrorCode::UnknownSymbol: return "UnknownSymbol";
    case ErrorCode::RuleLengthMismatch: return "RuleLengthMismatch";
    case ErrorCode::BadLength: return "BadLength";
    case ErrorCode::Overflow: return "Overflow";
    case ErrorCode::NotPrimitive: return "NotPrimitive";
    case ErrorCode::CertificationFailed: return "CertificationFailed";
    case ErrorCode::LengthMismatch: return "LengthMismatch";
    case ErrorCode::EmptySeeds: return "EmptySeeds";
    case ErrorCode::NotInGroup: return "NotInGroup";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::BadModulus: return "BadModulus";
    case ErrorCode::NotPrime: return "NotPrime";
    case ErrorCode::EqualPrimes: return "EqualPrimes";
    case ErrorCode::BadBlocks: return "BadBlocks";
    case ErrorCode::BadObservable: return "BadObservable";
    case ErrorCode::InternalInvariantViolation: return "InternalInvariantViolation";
    case ErrorCode::IdentityViolation: return "IdentityViolation";
    case ErrorCode::BoundViolation: return "BoundViolation";
    case ErrorCode::GroupTooLarge: return "GroupTooLarge";
  }
  return "UnknownError";
}

bool is_bug_signal(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::InternalInvariantViolation:
    case ErrorCode::IdentityViolation:
    case ErrorCode::BoundViolation:
    case ErrorCode::GroupTooLarge:
      return true;
    default:
      return false;
  }
}

void fail(ErrorCode code, const std::string& what) { throw Error(code, what); }

}  // namespace substkit
