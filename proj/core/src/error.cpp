#include "plumb/error.hpp"

namespace plumb {

std::string_view error_name(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::EmptyGraph: return "EmptyGraph";
    case ErrorCode::DuplicateId: return "DuplicateId";
    case ErrorCode::LoopEdge: return "LoopEdge";
    case ErrorCode::Disconnected: return "Disconnected";
    case ErrorCode::UnknownVertexInEdge: return "UnknownVertexInEdge";
    case ErrorCode::NegativeGenus: return "NegativeGenus";
    case ErrorCode::UnknownVertex: return "UnknownVertex";
    case ErrorCode::UnknownEdge: return "UnknownEdge";
    case ErrorCode::NotSymmetric: return "NotSymmetric";
    case ErrorCode::NotNonNegative: return "NotNonNegative";
    case ErrorCode::InternalStall: return "InternalStall";
    case ErrorCode::IsolatedVertexWithoutHalfEdge: return "IsolatedVertexWithoutHalfEdge";
    case ErrorCode::InvalidTwistOverride: return "InvalidTwistOverride";
    case ErrorCode::NotExceptional: return "NotExceptional";
    case ErrorCode::WrongValence: return "WrongValence";
    case ErrorCode::SameNeighbor: return "SameNeighbor";
    case ErrorCode::WeightTooLarge: return "WeightTooLarge";
    case ErrorCode::NonPositiveWeight: return "NonPositiveWeight";
    case ErrorCode::NonPositiveArea: return "NonPositiveArea";
    case ErrorCode::WitnessMismatch: return "WitnessMismatch";
    case ErrorCode::MalformedMove: return "MalformedMove";
    case ErrorCode::SideMismatch: return "SideMismatch";
    case ErrorCode::InconsistentPage: return "InconsistentPage";
    case ErrorCode::ExponentNegative: return "ExponentNegative";
    case ErrorCode::TooShort: return "TooShort";
    case ErrorCode::NotApplicable: return "NotApplicable";
    case ErrorCode::NotUnimodular: return "NotUnimodular";
    case ErrorCode::NotCircular: return "NotCircular";
    case ErrorCode::MalformedWord: return "MalformedWord";
    case ErrorCode::Overflow: return "Overflow";
  }
  return "Unknown";
}

}  // namespace plumb
