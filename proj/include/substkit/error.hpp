#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace substkit {

enum class ErrorCode {
  // input and data errors
  ParseError,
  EmptyAlphabet,
  DuplicateSymbol,
  UnknownSymbol,
  RuleLengthMismatch,
  BadLength,
  Overflow,
  NotPrimitive,
  CertificationFailed,
  LengthMismatch,
  EmptySeeds,
  NotInGroup,
  IndexOutOfRange,
  BadModulus,
  NotPrime,
  EqualPrimes,
  BadBlocks,
  BadObservable,
  // theorem checks; a failure here is an implementation bug
  InternalInvariantViolation,
  IdentityViolation,
  BoundViolation,
  GroupTooLarge,
};

std::string_view error_name(ErrorCode code) noexcept;

/// True for codes that can only be raised by a failed theorem check.
bool is_bug_signal(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }
  std::string_view name() const noexcept { return error_name(code_); }

 private:
  ErrorCode code_;
};

[[noreturn]] void fail(ErrorCode code, const std::string& what);

inline void check_theorem(bool holds, ErrorCode code, const std::string& what) {
  if (!holds) fail(code, what);
}

}  // namespace substkit
