#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "plumb/graph.hpp"
#include "plumb/rational.hpp"

namespace plumb {

enum class GSMode { Concave, Convex };

std::string_view to_string(GSMode mode) noexcept;

/// Q z = a with a > 0, and z > 0 (Concave) or z <= 0 (Convex).
struct GSWitness {
  RationalVector z;
  RationalVector a;
  GSMode mode = GSMode::Concave;
};

/// True when w satisfies every GSWitness invariant against q.
bool verify_witness(const SymmetricIntMatrix& q, const GSWitness& w);

/// Decides the positive (Concave) or negative (Convex) GS criterion exactly.
/// Strict inequalities are recovered from z >= 1, Qz >= 1 (resp. z <= 0,
/// Qz >= 1) by scaling the cone. The returned witness is scaled to the
/// primitive integer direction of z; it is one representative of a cone of
/// solutions, not a canonical choice.
std::optional<GSWitness> check_gs(const DecoratedGraph& g, GSMode mode);

struct ConstructiveWitness {
  GSWitness witness;
  /// Vertex perturbed at each step, in order.
  std::vector<std::size_t> perturbed;
};

/// Concave witness of a non-negative divisor by iterated perturbation of the
/// all-ones vector: while some a_l = 0 has a neighbor i with a_i > 0, raise
/// z_i by eps (eps = a_i / (2 max(1, -Q_ii)) if Q_ii < 0, else 1). Sources are
/// taken breadth first from the initial positive set.
/// Throws Error{NotNonNegative} unless sign_class(g) is NonNegative/Positive.
ConstructiveWitness nonnegative_witness(const DecoratedGraph& g);

/// Per-(vertex, edge) overrides for the distribution of s_i over incident
/// edges. Unlisted edges of a vertex share the rest by the default rule.
/// Vertices listed in half_edges get one extra half edge (edge index
/// GSEdgeEnd::half_edge) with s = 0, or with all of the remainder when the
/// vertex has no free real edge.
struct TwistPolicy {
  std::map<std::pair<std::string, std::size_t>, std::int64_t> overrides;
  std::set<std::string> half_edges;
};

struct GSEdgeEnd {
  static constexpr std::size_t half_edge = static_cast<std::size_t>(-1);

  std::size_t vertex = 0;
  std::size_t edge = 0;
  std::int64_t s = 0;
  /// x_{i,e} = -s_{i,e} z'_i - z'_j, as the coefficient of 1/pi.
  Rational x;
};

/// Combinatorial data of the GS construction. The 2 pi factors are carried
/// symbolically: z_prime[i] is the coefficient c with z'_i = c / pi, i.e. -z_i/2.
struct GSEdgeData {
  RationalVector z_prime;
  std::vector<GSEdgeEnd> ends;

  std::optional<std::int64_t> s_of(std::size_t vertex, std::size_t edge) const;
};

/// Default rule per vertex: every free edge gets floor(r/k) for the r left to
/// distribute over k free edges, and the last (r mod k) free edges get one more.
/// Throws Error{IsolatedVertexWithoutHalfEdge, InvalidTwistOverride, UnknownVertex}.
GSEdgeData gs_edge_data(const DecoratedGraph& g, const RationalVector& z, const TwistPolicy& policy = {});

/// Splits total over k slots: floor(total/k) each, +1 on the trailing (total mod k).
std::vector<std::int64_t> split_evenly(std::int64_t total, std::size_t k);

}  // namespace plumb
