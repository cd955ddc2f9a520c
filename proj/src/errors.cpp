#include "bichrome/errors.hpp"

namespace bichrome {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::EqualPoints: return "EqualPoints";
    case ErrorCode::VerticalLine: return "VerticalLine";
    case ErrorCode::CoordinateBound: return "CoordinateBound";
    case ErrorCode::GeneralPosition: return "GeneralPosition";
    case ErrorCode::AdjacencyViolation: return "AdjacencyViolation";
    case ErrorCode::ConcurrentLines: return "ConcurrentLines";
    case ErrorCode::EmptyRed: return "EmptyRed";
    case ErrorCode::EmptyInstance: return "EmptyInstance";
    case ErrorCode::LimitExceeded: return "LimitExceeded";
    case ErrorCode::Overflow: return "Overflow";
    case ErrorCode::InvalidInput: return "InvalidInput";
  }
  return "Unknown";
}

}  // namespace bichrome
