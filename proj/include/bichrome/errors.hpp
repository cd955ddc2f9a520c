#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace bichrome {

enum class ErrorCode {
  EqualPoints,
  VerticalLine,
  CoordinateBound,
  GeneralPosition,
  AdjacencyViolation,
  ConcurrentLines,
  EmptyRed,
  EmptyInstance,
  LimitExceeded,
  Overflow,
  InvalidInput,
};

std::string_view to_string(ErrorCode code);

// Every failure the library reports carries a machine-readable code; the CLI
// serializes it as {"error": <code>, "message": <what>}.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace bichrome
