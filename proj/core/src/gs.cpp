#include "plumb/gs.hpp"

#include <algorithm>
#include <deque>

#include "plumb/error.hpp"
#include "plumb/simplex.hpp"

namespace plumb {

std::string_view to_string(GSMode mode) noexcept { return mode == GSMode::Concave ? "concave" : "convex"; }

bool verify_witness(const SymmetricIntMatrix& q, const GSWitness& w) {
  const auto n = q.dimension();
  if (w.z.size() != n || w.a.size() != n) return false;
  if (q.multiply(w.z) != w.a) return false;
  for (std::size_t i = 0; i < n; ++i) {
    if (w.a[i] <= 0) return false;
    if (w.mode == GSMode::Concave ? w.z[i] <= 0 : w.z[i] > 0) return false;
  }
  return true;
}

namespace {

// Positive rescale of z to the primitive integer vector on its ray.
RationalVector primitive_direction(RationalVector z) {
  Integer lcm = 1;
  for (const auto& x : z) lcm = boost::multiprecision::lcm(lcm, boost::multiprecision::denominator(x));
  Integer gcd = 0;
  for (const auto& x : z) {
    const Integer scaled = boost::multiprecision::numerator(Rational(x * lcm));
    gcd = boost::multiprecision::gcd(gcd, abs(scaled));
  }
  if (gcd == 0) return z;
  const Rational factor(lcm, gcd);
  for (auto& x : z) x *= factor;
  return z;
}

}  // namespace

std::optional<GSWitness> check_gs(const DecoratedGraph& g, GSMode mode) {
  const auto q = intersection_matrix(g);
  const auto n = q.dimension();
  RationalMatrix a(n, RationalVector(n));
  RationalVector b(n, 1);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      // Concave: z = 1 + y, Q y >= 1 - Q 1. Convex: z = -y, -Q y >= 1.
      a[i][j] = mode == GSMode::Concave ? q(i, j) : -q(i, j);
      if (mode == GSMode::Concave) b[i] -= q(i, j);
    }
  }
  auto y = find_nonnegative_point(a, b);
  if (!y) return std::nullopt;
  RationalVector z(n);
  for (std::size_t i = 0; i < n; ++i) z[i] = mode == GSMode::Concave ? Rational(1 + (*y)[i]) : Rational(-(*y)[i]);
  z = primitive_direction(std::move(z));
  GSWitness w{z, q.multiply(z), mode};
  if (!verify_witness(q, w)) throw Error(ErrorCode::InternalStall, "simplex returned a point that fails verification");
  return w;
}

ConstructiveWitness nonnegative_witness(const DecoratedGraph& g) {
  if (!is_nonnegative(sign_class(g)))
    throw Error(ErrorCode::NotNonNegative, std::string("sign class is ") + std::string(to_string(sign_class(g))));
  const auto q = intersection_matrix(g);
  const auto n = q.dimension();
  ConstructiveWitness out;
  RationalVector z(n, 1);
  RationalVector a = q.multiply(z);

  std::vector<bool> queued(n, false);
  std::deque<std::size_t> frontier;
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i] > 0) {
      frontier.push_back(i);
      queued[i] = true;
    }
  }
  auto zeros_remain = [&] { return std::any_of(a.begin(), a.end(), [](const Rational& x) { return x == 0; }); };

  while (zeros_remain() && !frontier.empty()) {
    const auto i = frontier.front();
    frontier.pop_front();
    bool has_zero_neighbor = false;
    for (std::size_t l = 0; l < n; ++l) has_zero_neighbor |= l != i && q(i, l) > 0 && a[l] == 0;
    if (has_zero_neighbor) {
      const auto qii = q(i, i);
      const Rational eps = qii < 0 ? Rational(a[i] / (2 * std::max<std::int64_t>(1, -qii))) : Rational(1);
      z[i] += eps;
      a = q.multiply(z);
      out.perturbed.push_back(i);
    }
    for (std::size_t j = 0; j < n; ++j) {
      if (!queued[j] && a[j] > 0) {
        queued[j] = true;
        frontier.push_back(j);
      }
    }
  }
  if (zeros_remain())
    throw Error(ErrorCode::InternalStall, "no positive neighbor reaches a vertex with a_l = 0");
  out.witness = GSWitness{std::move(z), std::move(a), GSMode::Concave};
  if (!verify_witness(q, out.witness)) throw Error(ErrorCode::InternalStall, "perturbation lost positivity");
  return out;
}

std::optional<std::int64_t> GSEdgeData::s_of(std::size_t vertex, std::size_t edge) const {
  for (const auto& e : ends) {
    if (e.vertex == vertex && e.edge == edge) return e.s;
  }
  return std::nullopt;
}

std::vector<std::int64_t> split_evenly(std::int64_t total, std::size_t k) {
  if (k == 0) return {};
  const auto kk = static_cast<std::int64_t>(k);
  std::int64_t base = total / kk;
  if (total % kk != 0 && total < 0) --base;
  const auto extra = static_cast<std::size_t>(total - base * kk);
  std::vector<std::int64_t> out(k, base);
  for (std::size_t i = k - extra; i < k; ++i) ++out[i];
  return out;
}

GSEdgeData gs_edge_data(const DecoratedGraph& g, const RationalVector& z, const TwistPolicy& policy) {
  const auto n = g.vertex_count();
  if (z.size() != n) throw Error(ErrorCode::WitnessMismatch, "witness length differs from vertex count");
  for (const auto& [key, value] : policy.overrides) {
    const auto v = g.vertex_index(key.first);
    if (key.second >= g.edge_count() || (g.edges()[key.second].u != v && g.edges()[key.second].v != v))
      throw Error(ErrorCode::InvalidTwistOverride,
                  DecoratedGraph::edge_label(key.second) + " is not incident to '" + key.first + "'");
  }
  for (const auto& id : policy.half_edges) g.vertex_index(id);

  GSEdgeData data;
  data.z_prime.resize(n);
  for (std::size_t i = 0; i < n; ++i) data.z_prime[i] = -z[i] / 2;

  for (std::size_t i = 0; i < n; ++i) {
    const auto& v = g.vertex(i);
    const auto incident = g.incident_edges(i);
    const bool half = policy.half_edges.count(v.id) > 0;
    if (incident.empty() && !half)
      throw Error(ErrorCode::IsolatedVertexWithoutHalfEdge, "vertex '" + v.id + "' has no incident edge");

    std::int64_t remaining = v.self_intersection;
    std::vector<std::size_t> free_edges;
    std::vector<std::int64_t> s(incident.size());
    for (std::size_t k = 0; k < incident.size(); ++k) {
      auto it = policy.overrides.find({v.id, incident[k]});
      if (it != policy.overrides.end()) {
        s[k] = it->second;
        remaining -= it->second;
      } else {
        free_edges.push_back(k);
      }
    }
    std::int64_t half_s = 0;
    if (free_edges.empty() && half) {
      half_s = remaining;
    } else if (free_edges.empty()) {
      if (remaining != 0)
        throw Error(ErrorCode::InvalidTwistOverride, "overrides at '" + v.id + "' do not sum to s");
    } else {
      const auto parts = split_evenly(remaining, free_edges.size());
      for (std::size_t k = 0; k < free_edges.size(); ++k) s[free_edges[k]] = parts[k];
    }
    for (std::size_t k = 0; k < incident.size(); ++k) {
      const auto j = g.edges()[incident[k]].other(i);
      data.ends.push_back({i, incident[k], s[k], Rational(-s[k] * data.z_prime[i] - data.z_prime[j])});
    }
    if (half) data.ends.push_back({i, GSEdgeEnd::half_edge, half_s, Rational(-half_s * data.z_prime[i])});
  }
  return data;
}

}  // namespace plumb
