#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace ctqw {

enum class ErrorCode {
  // input / contract errors
  ParseError,
  IndexOutOfRange,
  SelfLoop,
  DisconnectedGraph,
  DimensionMismatch,
  ParameterOutOfDomain,
  UnsupportedFamily,
  NoClosedForm,
  NoClosedFormMeasure,
  UnsupportedMomentOrder,
  UnsupportedEdgeBehavior,
  InsufficientSpan,
  WindowTooShort,
  TruncationTooLarge,
  GraphTooLarge,
  // graph structure
  NotQDGraph,
  // numerical failures
  EigenSolverFailure,
  DivergentFraction,
  QuadratureNotConverged,
  TailMassExceeded,
  DegenerateNodes,
};

std::string_view to_string(ErrorCode code);

/// True for codes that signal a numerical (rather than input) failure.
bool is_numerical(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& message) {
  throw Error(code, message);
}

}  // namespace ctqw
