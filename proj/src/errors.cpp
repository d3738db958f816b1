#include "spinetorsion/errors.hpp"

namespace spinetorsion {

std::string_view error_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::Syntax: return "SyntaxError";
    case ErrorCode::UnpairedFace: return "UnpairedFace";
    case ErrorCode::NonOrientable: return "NonOrientable";
    case ErrorCode::CyclicTriangle: return "CyclicTriangle";
    case ErrorCode::NonStandardDual: return "NonStandardDual";
    case ErrorCode::Disconnected: return "Disconnected";
    case ErrorCode::MalformedBranching: return "MalformedBranching";
    case ErrorCode::SelfAdjacentFace: return "SelfAdjacentFace";
    case ErrorCode::ResultNonStandard: return "ResultNonStandard";
    case ErrorCode::NotApplicable: return "NotApplicable";
    case ErrorCode::Stuck: return "Stuck";
    case ErrorCode::InconsistentAnchor: return "InconsistentAnchor";
    case ErrorCode::RelatorNotKilled: return "RelatorNotKilled";
    case ErrorCode::NotAcyclicNoBasis: return "NotAcyclicNoBasis";
    case ErrorCode::BasisRankMismatch: return "BasisRankMismatch";
    case ErrorCode::TransportFailure: return "TransportFailure";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
  }
  return "UnknownError";
}

bool is_validation_error(ErrorCode code) {
  switch (code) {
    case ErrorCode::Syntax:
    case ErrorCode::UnpairedFace:
    case ErrorCode::NonOrientable:
    case ErrorCode::CyclicTriangle:
    case ErrorCode::NonStandardDual:
    case ErrorCode::Disconnected:
    case ErrorCode::MalformedBranching:
      return true;
    default:
      return false;
  }
}

}  // namespace spinetorsion
