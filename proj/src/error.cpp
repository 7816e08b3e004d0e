#include "cellcover/error.hpp"

namespace cellcover {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::DanglingReference: return "DanglingReference";
    case ErrorCode::OpenBoundary: return "OpenBoundary";
    case ErrorCode::LocalFinitenessViolation: return "LocalFinitenessViolation";
    case ErrorCode::DuplicateCell: return "DuplicateCell";
    case ErrorCode::InvalidChart: return "InvalidChart";
    case ErrorCode::InfiniteComplex: return "InfiniteComplex";
    case ErrorCode::MaterializationBudgetExceeded: return "MaterializationBudgetExceeded";
    case ErrorCode::UnknownCell: return "UnknownCell";
    case ErrorCode::NotAPath: return "NotAPath";
    case ErrorCode::UnknownVertex: return "UnknownVertex";
    case ErrorCode::InfiniteComponent: return "InfiniteComponent";
    case ErrorCode::UnmappedGenerator: return "UnmappedGenerator";
    case ErrorCode::UnknownGenerator: return "UnknownGenerator";
    case ErrorCode::BudgetExceeded: return "BudgetExceeded";
    case ErrorCode::InvalidMonodromy: return "InvalidMonodromy";
    case ErrorCode::UnknownCoset: return "UnknownCoset";
    case ErrorCode::TableMismatch: return "TableMismatch";
    case ErrorCode::InvalidHomomorphism: return "InvalidHomomorphism";
    case ErrorCode::UnsupportedPi1: return "UnsupportedPi1";
    case ErrorCode::InconsistentInclusion: return "InconsistentInclusion";
    case ErrorCode::MissingLabel: return "MissingLabel";
    case ErrorCode::SizeBudgetExceeded: return "SizeBudgetExceeded";
    case ErrorCode::NotAHomomorphism: return "NotAHomomorphism";
    case ErrorCode::InvalidGroup: return "InvalidGroup";
    case ErrorCode::TorsionInPi1: return "TorsionInPi1";
    case ErrorCode::SyntaxError: return "SyntaxError";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

namespace {

std::string compose(ErrorCode code, const std::string& message,
                    std::optional<std::size_t> position) {
  std::string text{to_string(code)};
  if (position) {
    text += "(" + std::to_string(*position) + ")";
  }
  if (!message.empty()) {
    text += ": " + message;
  }
  return text;
}

}  // namespace

Error::Error(ErrorCode code, const std::string& message,
             std::optional<std::size_t> position)
    : std::runtime_error(compose(code, message, position)),
      code_(code),
      position_(position),
      detail_(message) {}

}  // namespace cellcover
