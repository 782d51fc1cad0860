#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace plumb {

/// Every precondition violation raised by the library carries one of these.
/// The enumerator name is part of the CLI contract (reported verbatim).
enum class ErrorCode {
  // plumbing_graph
  EmptyGraph,
  DuplicateId,
  LoopEdge,
  Disconnected,
  UnknownVertexInEdge,
  NegativeGenus,
  UnknownVertex,
  UnknownEdge,
  NotSymmetric,
  // gs_solver
  NotNonNegative,
  InternalStall,
  IsolatedVertexWithoutHalfEdge,
  InvalidTwistOverride,
  // moves / augmented graphs
  NotExceptional,
  WrongValence,
  SameNeighbor,
  WeightTooLarge,
  NonPositiveWeight,
  NonPositiveArea,
  WitnessMismatch,
  MalformedMove,
  // open_book
  SideMismatch,
  InconsistentPage,
  // torus_calculus
  ExponentNegative,
  TooShort,
  NotApplicable,
  NotUnimodular,
  NotCircular,
  MalformedWord,
  Overflow,
};

std::string_view error_name(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& detail)
      : std::runtime_error(std::string(error_name(code)) + ": " + detail), code_(code) {}

  ErrorCode code() const noexcept { return code_; }
  std::string_view name() const noexcept { return error_name(code_); }

 private:
  ErrorCode code_;
};

}  // namespace plumb
