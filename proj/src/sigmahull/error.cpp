#include "sigmahull/error.hpp"

namespace sigmahull {

std::string_view error_name(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::FieldMismatch: return "FieldMismatch";
    case ErrorCode::InvalidExponent: return "InvalidExponent";
    case ErrorCode::InvalidField: return "InvalidField";
    case ErrorCode::ZeroCode: return "ZeroCode";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::Incompatible: return "Incompatible";
    case ErrorCode::FormulaMismatch: return "FormulaMismatch";
    case ErrorCode::NotSquare: return "NotSquare";
    case ErrorCode::NotMonomial: return "NotMonomial";
    case ErrorCode::PreconditionFailed: return "PreconditionFailed";
    case ErrorCode::DegenerateDefiningMatrix: return "DegenerateDefiningMatrix";
    case ErrorCode::FieldTooSmall: return "FieldTooSmall";
    case ErrorCode::TargetOutOfRange: return "TargetOutOfRange";
    case ErrorCode::SearchExhausted: return "SearchExhausted";
    case ErrorCode::NotMds: return "NotMds";
    case ErrorCode::Parse: return "Parse";
    case ErrorCode::Io: return "Io";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

}  // namespace sigmahull
