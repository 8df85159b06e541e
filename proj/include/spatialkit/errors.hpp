#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace spatialkit {

enum class ErrorCode {
  DegenerateInput,
  AmbiguousAxis,
  TieDetected,
  GenerationExhausted,
  Unreachable,
  TooLarge,
  TaskMismatch,
  EmptyRun,
  IoFailure,
  InvalidArgument,
  ParseFailure,
};

std::string_view to_string(ErrorCode code);

// Every failure raised by the library carries a stable code so the CLI can
// print a machine-parseable line.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace spatialkit
