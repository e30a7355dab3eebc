#include "cadef/error.hpp"

namespace cadef {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::ZeroInput: return "ZeroInput";
    case ErrorCode::PoleAtEvaluationPoint: return "PoleAtEvaluationPoint";
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::SyntaxError: return "SyntaxError";
    case ErrorCode::UnknownSymbol: return "UnknownSymbol";
    case ErrorCode::DegreeBoundExceeded: return "DegreeBoundExceeded";
    case ErrorCode::NonUnitLeadingCoefficient: return "NonUnitLeadingCoefficient";
    case ErrorCode::PossiblyInfiniteDimensional: return "PossiblyInfiniteDimensional";
    case ErrorCode::NotNilpotent: return "NotNilpotent";
    case ErrorCode::NotInvertible: return "NotInvertible";
    case ErrorCode::NonSquareBlockDimension: return "NonSquareBlockDimension";
    case ErrorCode::PrimitiveElementSearchExhausted: return "PrimitiveElementSearchExhausted";
    case ErrorCode::DenominatorInStructureConstants: return "DenominatorInStructureConstants";
    case ErrorCode::OutOfRange: return "OutOfRange";
    case ErrorCode::EvidenceFailed: return "EvidenceFailed";
    case ErrorCode::ChainMismatch: return "ChainMismatch";
    case ErrorCode::CostGuardExceeded: return "CostGuardExceeded";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::InvalidInput: return "InvalidInput";
  }
  return "Unknown";
}

}  // namespace cadef
