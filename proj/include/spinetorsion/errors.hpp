#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace spinetorsion {

enum class ErrorCode {
  // input / validation
  Syntax,
  UnpairedFace,
  NonOrientable,
  CyclicTriangle,
  NonStandardDual,
  Disconnected,
  MalformedBranching,
  // moves
  SelfAdjacentFace,
  ResultNonStandard,
  NotApplicable,
  Stuck,
  // algebra
  InconsistentAnchor,
  RelatorNotKilled,
  NotAcyclicNoBasis,
  BasisRankMismatch,
  TransportFailure,
  InvalidArgument,
};

std::string_view error_name(ErrorCode code);

/// True for errors that come from a malformed or invalid spine description.
bool is_validation_error(ErrorCode code);

class SpineError : public std::runtime_error {
 public:
  SpineError(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(error_name(code)) + ": " + message),
        code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace spinetorsion
