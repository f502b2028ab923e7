#include "csf/error.hpp"

namespace csf {

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::WeightMismatch: return "WeightMismatch";
    case ErrorCode::InvalidPartition: return "InvalidPartition";
    case ErrorCode::VertexOutOfRange: return "VertexOutOfRange";
    case ErrorCode::InvalidSize: return "InvalidSize";
    case ErrorCode::InvalidPoset: return "InvalidPoset";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::CountOverflow: return "CountOverflow";
    case ErrorCode::OracleTooLarge: return "OracleTooLarge";
    case ErrorCode::NegativeCoefficient: return "NegativeCoefficient";
    case ErrorCode::NotClawFree: return "NotClawFree";
    case ErrorCode::TypeMismatch: return "TypeMismatch";
    case ErrorCode::EmptyWord: return "EmptyWord";
    case ErrorCode::NotInImage: return "NotInImage";
  }
  return "Unknown";
}

}  // namespace csf
