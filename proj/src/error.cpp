#include "ryb/error.hpp"

namespace ryb {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::NonStochasticColumns: return "NonStochasticColumns";
    case ErrorCode::OutOfRangeShare: return "OutOfRangeShare";
    case ErrorCode::RankingViolated: return "RankingViolated";
    case ErrorCode::InvalidAes: return "InvalidAes";
    case ErrorCode::InvalidEws: return "InvalidEws";
    case ErrorCode::DegenerateT: return "DegenerateT";
    case ErrorCode::GenerationExhausted: return "GenerationExhausted";
    case ErrorCode::NonPositiveLevels: return "NonPositiveLevels";
    case ErrorCode::InconsistentLevels: return "InconsistentLevels";
    case ErrorCode::AsymptotePole: return "AsymptotePole";
    case ErrorCode::OnLine: return "OnLine";
    case ErrorCode::Infeasible: return "Infeasible";
    case ErrorCode::UnmatchedSignature: return "UnmatchedSignature";
    case ErrorCode::ClosedFormMismatch: return "ClosedFormMismatch";
    case ErrorCode::SingularSystem: return "SingularSystem";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::ValidationError: return "ValidationError";
    case ErrorCode::IoError: return "IoError";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& message)
    : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

}  // namespace ryb
