#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace grpx {

enum class ErrorCode {
  NotAssociative,
  NoIdentity,
  NotLatinSquare,
  InvalidInput,
  OrderCapExceeded,
  InconsistentPresentation,
  ActionNotHomomorphism,
  ActionNotAutomorphism,
  SearchBudgetExceeded,
  FaceBudgetExceeded,
  NotAPGroup,
  NotAbelian,
  NotSolvable,
  NotPrime,
  SyntaxError,
  UnknownName,
  DimensionMismatch,
  CacheVersionMismatch,
  CorruptCache,
  Io,
};

std::string_view to_string(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace grpx
