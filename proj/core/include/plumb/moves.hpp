#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "plumb/graph.hpp"
#include "plumb/rational.hpp"

namespace plumb {

/// A symplectic divisor: a graph plus positive areas a_i, optionally with a
/// witness z satisfying Q z = a exactly. Vectors are indexed like vertices().
class AugmentedGraph {
 public:
  /// Throws Error{NonPositiveArea, WitnessMismatch}.
  AugmentedGraph(DecoratedGraph graph, RationalVector area, std::optional<RationalVector> witness = std::nullopt);

  const DecoratedGraph& graph() const noexcept { return graph_; }
  const RationalVector& area() const noexcept { return area_; }
  const std::optional<RationalVector>& witness() const noexcept { return witness_; }

  friend bool operator==(const AugmentedGraph&, const AugmentedGraph&) = default;

 private:
  DecoratedGraph graph_;
  RationalVector area_;
  std::optional<RationalVector> witness_;
};

enum class MoveKind { ToricUp, ToricDown, InteriorUp, InteriorDown };

std::string_view to_string(MoveKind kind) noexcept;

/// One move in a script. site is an edge label ("e3") for ToricUp and a vertex
/// id otherwise. weight is present iff the move is augmented; it is the area of
/// the exceptional sphere with 2 pi factored out.
struct MoveRecord {
  MoveKind kind = MoveKind::ToricUp;
  std::string site;
  std::optional<Rational> weight;

  friend bool operator==(const MoveRecord&, const MoveRecord&) = default;
};

/// "toric_up:e3", "toric_up:e3:w=1/2", "interior_down:E1", ...
/// Throws Error{MalformedMove}.
MoveRecord parse_move(std::string_view spec);
std::string format_move(const MoveRecord& move);

/// Subdivides edge e = {i, j} by a new (genus 0, s = -1) vertex; s_i, s_j drop
/// by one. The new vertex is appended; e becomes {i, E} and {E, j} follows it.
DecoratedGraph toric_blowup(const DecoratedGraph& g, std::size_t edge);

/// Inverse of toric_blowup. The two incident edges are replaced by one edge
/// between the neighbors, placed at the position of the earlier one.
/// Throws Error{NotExceptional, WrongValence, SameNeighbor}.
DecoratedGraph toric_blowdown(const DecoratedGraph& g, std::size_t vertex);

/// Appends a (genus 0, s = -1) leaf at v; s_v drops by one.
DecoratedGraph interior_blowup(const DecoratedGraph& g, std::size_t vertex);

/// Throws Error{NotExceptional, WrongValence}.
DecoratedGraph interior_blowdown(const DecoratedGraph& g, std::size_t vertex);

/// Areas (a_i - w, w, a_j - w); witness entry for the new vertex z_i + z_j - w.
/// Throws Error{WeightTooLarge, NonPositiveWeight}.
AugmentedGraph augmented_toric_blowup(const AugmentedGraph& ag, std::size_t edge, const Rational& weight);
/// Neighbors regain the exceptional area; the witness entry is dropped.
AugmentedGraph augmented_toric_blowdown(const AugmentedGraph& ag, std::size_t vertex);

/// Areas (a_v - w, w); witness entry for the new vertex z_v - w.
/// Throws Error{WeightTooLarge, NonPositiveWeight}.
AugmentedGraph augmented_interior_blowup(const AugmentedGraph& ag, std::size_t vertex, const Rational& weight);
AugmentedGraph augmented_interior_blowdown(const AugmentedGraph& ag, std::size_t vertex);

/// Applies a plain move (weight must be absent; Error{MalformedMove} otherwise).
DecoratedGraph apply_move(const DecoratedGraph& g, const MoveRecord& move);
/// Applies an augmented move. Up-moves need a weight; down-moves must not carry one.
AugmentedGraph apply_move(const AugmentedGraph& ag, const MoveRecord& move);

bool is_exceptional(const VertexData& v) noexcept;
/// No component is an exceptional sphere.
bool is_toric_minimal(const DecoratedGraph& g);

/// Every blow-down (toric or interior) that succeeds on g, in vertex order.
std::vector<MoveRecord> applicable_blowdowns(const DecoratedGraph& g);

/// Terminal graphs of all maximal blow-down sequences, one per isomorphism
/// class, ordered by canonical code. Confluence is not assumed.
std::vector<DecoratedGraph> minimal_models(const DecoratedGraph& g);

struct Representative {
  DecoratedGraph graph;
  std::vector<MoveRecord> moves;
};

/// Breadth-first search of g and everything reachable by blow-downs for a
/// NonNegative or Positive graph; g itself first, then by number of moves.
/// Only blow-downs are explored, so absence does not rule out a non-negative
/// graph reachable through blow-ups.
std::optional<Representative> nonnegative_representative(const DecoratedGraph& g);

}  // namespace plumb
