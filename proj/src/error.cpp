#include "crystal_pop/error.hpp"

namespace crystal_pop {

const char* to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::InvalidPartition: return "InvalidPartition";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::ShapeMismatch: return "ShapeMismatch";
    case ErrorCode::RowViolation: return "RowViolation";
    case ErrorCode::ColumnViolation: return "ColumnViolation";
    case ErrorCode::EntryOutOfRange: return "EntryOutOfRange";
    case ErrorCode::SizeLimitExceeded: return "SizeLimitExceeded";
    case ErrorCode::IsomorphismFailure: return "IsomorphismFailure";
    case ErrorCode::NotPoppable: return "NotPoppable";
    case ErrorCode::NonTermination: return "NonTermination";
    case ErrorCode::MeetUndefined: return "MeetUndefined";
    case ErrorCode::InconsistentFamily: return "InconsistentFamily";
    case ErrorCode::NonUniqueMinimum: return "NonUniqueMinimum";
    case ErrorCode::HypothesisViolated: return "HypothesisViolated";
  }
  return "Unknown";
}

namespace {

std::string decorate(ErrorCode code, const std::string& message,
                     const std::optional<Cell>& cell) {
  std::string out = to_string(code);
  out += ": ";
  out += message;
  if (cell) {
    out += " at (" + std::to_string(cell->row) + "," +
           std::to_string(cell->col) + ")";
  }
  return out;
}

}  // namespace

Error::Error(ErrorCode code, const std::string& message,
             std::optional<Cell> cell)
    : std::runtime_error(decorate(code, message, cell)),
      code_(code),
      cell_(cell) {}

bool Error::is_input_error() const noexcept {
  switch (code_) {
    case ErrorCode::InvalidArgument:
    case ErrorCode::InvalidPartition:
    case ErrorCode::ParseError:
    case ErrorCode::ShapeMismatch:
    case ErrorCode::RowViolation:
    case ErrorCode::ColumnViolation:
    case ErrorCode::EntryOutOfRange:
    case ErrorCode::SizeLimitExceeded:
    case ErrorCode::HypothesisViolated:
      return true;
    default:
      return false;
  }
}

}  // namespace crystal_pop
