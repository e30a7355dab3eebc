#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace cadef {

enum class ErrorCode {
  ZeroInput,
  PoleAtEvaluationPoint,
  DivisionByZero,
  SyntaxError,
  UnknownSymbol,
  DegreeBoundExceeded,
  NonUnitLeadingCoefficient,
  PossiblyInfiniteDimensional,
  NotNilpotent,
  NotInvertible,
  NonSquareBlockDimension,
  PrimitiveElementSearchExhausted,
  DenominatorInStructureConstants,
  OutOfRange,
  EvidenceFailed,
  ChainMismatch,
  CostGuardExceeded,
  DimensionMismatch,
  InvalidInput,
};

std::string_view to_string(ErrorCode code);

/// Every failure raised by the library carries one of the codes above so
/// that the CLI can map it onto a report stage and an exit status.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what),
        code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

/// Parse failures additionally carry the byte offset into the input text.
class SyntaxError : public Error {
 public:
  SyntaxError(ErrorCode code, std::size_t position, const std::string& what)
      : Error(code, what + " at position " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

}  // namespace cadef
