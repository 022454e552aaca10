#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace splitspecies {

enum class ErrorCode {
  OutOfRange,
  SelfLoop,
  TooLarge,
  LengthMismatch,
  InvalidPermutation,
  NotSplit,
  NotSMax,
  NotAPartition,
  WrongClass,
  TooSmall,
  LabelClash,
  IsolatedGreen,
  NotBicolored,
  ConventionMismatch,
  NotAUnit,
  InsufficientBase,
  NonIntegralResult,
  IdentityViolation,
  ParseError,
};

std::string_view to_string(ErrorCode code);

/// Every failure raised by the library carries one of the codes above so
/// callers (the CLI in particular) can map it onto an exit status.
class SpeciesError : public std::runtime_error {
 public:
  SpeciesError(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] void fail(ErrorCode code, const std::string& what);

}  // namespace splitspecies
