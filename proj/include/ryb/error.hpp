#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace ryb {

enum class ErrorCode {
  NonStochasticColumns,
  OutOfRangeShare,
  RankingViolated,
  InvalidAes,
  InvalidEws,
  DegenerateT,
  GenerationExhausted,
  NonPositiveLevels,
  InconsistentLevels,
  AsymptotePole,
  OnLine,
  Infeasible,
  UnmatchedSignature,
  ClosedFormMismatch,
  SingularSystem,
  ParseError,
  ValidationError,
  IoError,
};

std::string_view to_string(ErrorCode code) noexcept;

/// Every failure raised by the library carries one of the codes above so
/// callers (the CLI in particular) can map it to an exit status.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message);

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace ryb
