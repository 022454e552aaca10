#include "splitspecies/error.hpp"

namespace splitspecies {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::OutOfRange: return "OutOfRange";
    case ErrorCode::SelfLoop: return "SelfLoop";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::LengthMismatch: return "LengthMismatch";
    case ErrorCode::InvalidPermutation: return "InvalidPermutation";
    case ErrorCode::NotSplit: return "NotSplit";
    case ErrorCode::NotSMax: return "NotSMax";
    case ErrorCode::NotAPartition: return "NotAPartition";
    case ErrorCode::WrongClass: return "WrongClass";
    case ErrorCode::TooSmall: return "TooSmall";
    case ErrorCode::LabelClash: return "LabelClash";
    case ErrorCode::IsolatedGreen: return "IsolatedGreen";
    case ErrorCode::NotBicolored: return "NotBicolored";
    case ErrorCode::ConventionMismatch: return "ConventionMismatch";
    case ErrorCode::NotAUnit: return "NotAUnit";
    case ErrorCode::InsufficientBase: return "InsufficientBase";
    case ErrorCode::NonIntegralResult: return "NonIntegralResult";
    case ErrorCode::IdentityViolation: return "IdentityViolation";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

void fail(ErrorCode code, const std::string& what) {
  throw SpeciesError(code, what);
}

}  // namespace splitspecies
