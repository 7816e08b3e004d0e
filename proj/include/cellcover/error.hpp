#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace cellcover {

enum class ErrorCode {
  // complex
  DanglingReference,
  OpenBoundary,
  LocalFinitenessViolation,
  DuplicateCell,
  InvalidChart,
  InfiniteComplex,
  MaterializationBudgetExceeded,
  UnknownCell,
  // paths
  NotAPath,
  // pi1
  UnknownVertex,
  InfiniteComponent,
  UnmappedGenerator,
  UnknownGenerator,
  // covers
  BudgetExceeded,
  InvalidMonodromy,
  UnknownCoset,
  TableMismatch,
  InvalidHomomorphism,
  UnsupportedPi1,
  // cech
  InconsistentInclusion,
  MissingLabel,
  SizeBudgetExceeded,
  NotAHomomorphism,
  InvalidGroup,
  // abelian
  TorsionInPi1,
  // io
  SyntaxError,
  InvalidArgument,
};

std::string_view to_string(ErrorCode code);

/// Domain error raised by every cellcover operation.
///
/// `position()` carries the letter index for NotAPath and the 1-based source
/// line for parse-time errors.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message,
        std::optional<std::size_t> position = std::nullopt);

  ErrorCode code() const noexcept { return code_; }
  std::optional<std::size_t> position() const noexcept { return position_; }
  const std::string& detail() const noexcept { return detail_; }

 private:
  ErrorCode code_;
  std::optional<std::size_t> position_;
  std::string detail_;
};

}  // namespace cellcover
