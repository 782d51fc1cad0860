#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "plumb/graph.hpp"
#include "plumb/gs.hpp"

namespace plumb {

using Side = GSMode;

/// s_{i,e} for every (vertex, incident edge) pair, chosen so that the
/// building block multiplicities q_{i,e} = s_{i,e} + 1 (concave) or
/// p_{i,e} = -s_{i,e} - 1 (convex) are all non-negative.
struct TwistDistribution {
  struct Entry {
    std::size_t vertex = 0;
    std::size_t edge = 0;
    std::int64_t s = 0;
    /// q_{i,e} or p_{i,e}, by side.
    std::int64_t multiplicity = 0;
  };

  Side side = Side::Concave;
  std::vector<Entry> entries;
};

/// Concave: needs sign class NonNegative/Positive. Convex: NonPositive,
/// Negative or Zero. Every edge of v_i but the first gets s = -1 and the
/// first takes s_i + d_i - 1. Throws Error{SideMismatch}.
TwistDistribution distribute_twists(const DecoratedGraph& g, Side side);

struct DehnTwist {
  std::string curve;
  int sign = 1;

  friend bool operator==(const DehnTwist&, const DehnTwist&) = default;
};

/// Surface S_i of the page contributed by one vertex before connect-summing.
struct PagePiece {
  std::string vertex;
  std::int64_t genus = 0;
  std::int64_t boundary = 0;
};

/// Abstract page plus monodromy. Neck curves are labeled "g:e<k>" and boundary
/// curves "d:<vertex>:<k>". The monodromy lists the neck twists in edge order,
/// then the boundary twists grouped by vertex; twists inside each block are
/// along disjoint curves and commute.
struct OpenBookDescription {
  Side side = Side::Concave;
  std::int64_t page_genus = 0;
  std::int64_t binding_count = 0;
  std::vector<std::string> neck_curves;
  std::vector<std::string> boundary_curves;
  std::vector<DehnTwist> monodromy;
  std::vector<PagePiece> pieces;
};

/// Page = connect sum of the S_i along the graph (genus sum g_i + b_1), with
/// s_i + d_i (concave) or -s_i - d_i (convex) boundary components per vertex.
/// Concave monodromy: negative neck twists then positive boundary twists.
/// Convex monodromy: positive neck twists then positive boundary twists.
/// Throws Error{SideMismatch}.
OpenBookDescription build_open_book(const DecoratedGraph& g, Side side);

struct PageInvariants {
  std::int64_t genus = 0;
  std::int64_t boundary_count = 0;
  std::int64_t euler_characteristic = 0;

  friend bool operator==(const PageInvariants&, const PageInvariants&) = default;
};

/// Stored genus and binding count with chi = 2 - 2g - q, after checking that the
/// pieces, curves and monodromy agree with them. Throws Error{InconsistentPage}.
PageInvariants page_invariants(const OpenBookDescription& ob);

}  // namespace plumb
