#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "plumb/rational.hpp"

namespace plumb {

struct VertexData {
  std::string id;
  std::int64_t genus = 0;
  std::int64_t self_intersection = 0;

  friend bool operator==(const VertexData&, const VertexData&) = default;
};

/// Unvalidated graph description, as read from a file.
struct RawGraph {
  std::vector<VertexData> vertices;
  std::vector<std::pair<std::string, std::string>> edges;
};

struct Edge {
  std::size_t u = 0;
  std::size_t v = 0;

  std::size_t other(std::size_t w) const noexcept { return w == u ? v : u; }
  friend bool operator==(const Edge&, const Edge&) = default;
};

/// A divisor graph: vertices decorated by (genus, self-intersection), one edge
/// per transverse intersection point. Connected, loop-free, multi-edges allowed.
/// Immutable once built; every instance satisfies the invariants.
class DecoratedGraph {
 public:
  /// Throws Error{EmptyGraph, NegativeGenus, DuplicateId, UnknownVertexInEdge,
  /// LoopEdge, Disconnected}, checked in that order.
  static DecoratedGraph from_raw(const RawGraph& raw);

  /// Same invariants, for edges already given by vertex index.
  static DecoratedGraph from_indexed(std::vector<VertexData> vertices, std::vector<Edge> edges);

  const std::vector<VertexData>& vertices() const noexcept { return vertices_; }
  const std::vector<Edge>& edges() const noexcept { return edges_; }
  std::size_t vertex_count() const noexcept { return vertices_.size(); }
  std::size_t edge_count() const noexcept { return edges_.size(); }
  const VertexData& vertex(std::size_t i) const { return vertices_.at(i); }

  std::optional<std::size_t> find_vertex(std::string_view id) const noexcept;
  /// Throws Error{UnknownVertex}.
  std::size_t vertex_index(std::string_view id) const;

  /// Edges are labeled "e1", "e2", ... by position in edges().
  static std::string edge_label(std::size_t edge);
  /// Accepts "e<k>" (1-based). Throws Error{UnknownEdge}.
  std::size_t edge_index(std::string_view label) const;

  /// d_i: every parallel edge counts once per endpoint.
  std::int64_t valence(std::size_t i) const;
  /// Edge indices incident to vertex i, in edge order.
  std::vector<std::size_t> incident_edges(std::size_t i) const;
  /// Number of edges joining i and j.
  std::int64_t multiplicity(std::size_t i, std::size_t j) const;

  /// First of "E1", "E2", ... not already used as a vertex id.
  std::string fresh_vertex_id() const;

  RawGraph to_raw() const;

  friend bool operator==(const DecoratedGraph&, const DecoratedGraph&) = default;

 private:
  DecoratedGraph(std::vector<VertexData> vertices, std::vector<Edge> edges)
      : vertices_(std::move(vertices)), edges_(std::move(edges)) {}

  std::vector<VertexData> vertices_;
  std::vector<Edge> edges_;
};

/// validate_graph: the checked entry point for parsed input.
inline DecoratedGraph validate_graph(const RawGraph& raw) { return DecoratedGraph::from_raw(raw); }

class SymmetricIntMatrix {
 public:
  /// Throws Error{NotSymmetric} when entries.size() != n*n or entries are not symmetric.
  SymmetricIntMatrix(std::size_t n, std::vector<std::int64_t> entries);

  std::size_t dimension() const noexcept { return n_; }
  std::int64_t operator()(std::size_t i, std::size_t j) const { return entries_[i * n_ + j]; }
  const std::vector<std::int64_t>& entries() const noexcept { return entries_; }

  RationalVector multiply(const RationalVector& z) const;

  friend bool operator==(const SymmetricIntMatrix&, const SymmetricIntMatrix&) = default;

 private:
  std::size_t n_;
  std::vector<std::int64_t> entries_;
};

struct Inertia {
  std::size_t b_plus = 0;
  std::size_t b_zero = 0;
  std::size_t b_minus = 0;

  std::size_t dimension() const noexcept { return b_plus + b_zero + b_minus; }
  friend bool operator==(const Inertia&, const Inertia&) = default;
};

enum class SignClass { NonNegative, NonPositive, Positive, Negative, Mixed, Zero };

std::string_view to_string(SignClass c) noexcept;

SymmetricIntMatrix intersection_matrix(const DecoratedGraph& g);

/// Signs of an exact congruence diagonalization over the rationals.
Inertia inertia(const SymmetricIntMatrix& m);

/// Classification by the values D.C_i = s_i + d_i.
SignClass sign_class(const DecoratedGraph& g);

inline bool is_nonnegative(SignClass c) noexcept {
  return c == SignClass::NonNegative || c == SignClass::Positive;
}
inline bool is_nonpositive(SignClass c) noexcept {
  return c == SignClass::NonPositive || c == SignClass::Negative;
}

/// Vertex indices of a cycle of spheres in cyclic order, starting at vertex 0 and
/// leaving it along its lowest-numbered edge. Length 1 is never circular.
std::optional<std::vector<std::size_t>> circular_order(const DecoratedGraph& g);

/// Self-intersections of a circular spherical divisor in cyclic order.
std::optional<std::vector<std::int64_t>> circular_sequence(const DecoratedGraph& g);

/// Cycle of spheres v1..vl with the given self-intersections (l >= 2; a
/// 2-cycle gets a double edge). Throws Error{TooShort} for l < 2.
DecoratedGraph make_cycle(const std::vector<std::int64_t>& self_intersections);

/// Chain of spheres v1 - v2 - ... - vl.
DecoratedGraph make_chain(const std::vector<std::int64_t>& self_intersections);

/// Canonical code under decorated multigraph isomorphism: equal codes iff the
/// graphs are isomorphic (ids are ignored).
std::vector<std::int64_t> canonical_code(const DecoratedGraph& g);

inline bool isomorphic(const DecoratedGraph& a, const DecoratedGraph& b) {
  return canonical_code(a) == canonical_code(b);
}

}  // namespace plumb
