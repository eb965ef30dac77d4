#pragma once

#include <optional>
#include <stdexcept>
#include <string>

namespace crystal_pop {

enum class ErrorCode {
  InvalidArgument,
  InvalidPartition,
  ParseError,
  ShapeMismatch,
  RowViolation,
  ColumnViolation,
  EntryOutOfRange,
  SizeLimitExceeded,
  IsomorphismFailure,
  NotPoppable,
  NonTermination,
  MeetUndefined,
  InconsistentFamily,
  NonUniqueMinimum,
  HypothesisViolated,
};

const char* to_string(ErrorCode code) noexcept;

/// 1-based (row, column) position of a tableau cell.
struct Cell {
  int row = 0;
  int col = 0;
  friend bool operator==(const Cell&, const Cell&) = default;
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message,
        std::optional<Cell> cell = std::nullopt);

  ErrorCode code() const noexcept { return code_; }
  const std::optional<Cell>& cell() const noexcept { return cell_; }

  /// True for errors caused by bad user input rather than by a failed
  /// mathematical invariant.
  bool is_input_error() const noexcept;

 private:
  ErrorCode code_;
  std::optional<Cell> cell_;
};

}  // namespace crystal_pop
