#include "plumb/graph.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <numeric>
#include <set>

#include "plumb/error.hpp"

namespace plumb {

namespace {

bool is_connected(std::size_t n, const std::vector<Edge>& edges) {
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  std::size_t components = n;
  for (const auto& e : edges) {
    const auto a = find(e.u);
    const auto b = find(e.v);
    if (a != b) {
      parent[a] = b;
      --components;
    }
  }
  return components == 1;
}

}  // namespace

DecoratedGraph DecoratedGraph::from_indexed(std::vector<VertexData> vertices, std::vector<Edge> edges) {
  if (vertices.empty()) throw Error(ErrorCode::EmptyGraph, "a divisor needs at least one component");
  std::set<std::string> ids;
  for (const auto& v : vertices) {
    if (v.genus < 0) throw Error(ErrorCode::NegativeGenus, "vertex '" + v.id + "' has negative genus");
    if (!ids.insert(v.id).second) throw Error(ErrorCode::DuplicateId, "vertex id '" + v.id + "' repeated");
  }
  for (const auto& e : edges) {
    if (e.u >= vertices.size() || e.v >= vertices.size())
      throw Error(ErrorCode::UnknownVertexInEdge, "edge endpoint out of range");
    if (e.u == e.v) throw Error(ErrorCode::LoopEdge, "edge joins '" + vertices[e.u].id + "' to itself");
  }
  if (!is_connected(vertices.size(), edges)) throw Error(ErrorCode::Disconnected, "graph is not connected");
  return DecoratedGraph(std::move(vertices), std::move(edges));
}

DecoratedGraph DecoratedGraph::from_raw(const RawGraph& raw) {
  if (raw.vertices.empty()) throw Error(ErrorCode::EmptyGraph, "a divisor needs at least one component");
  std::map<std::string, std::size_t, std::less<>> index;
  for (const auto& v : raw.vertices) {
    if (v.genus < 0) throw Error(ErrorCode::NegativeGenus, "vertex '" + v.id + "' has negative genus");
    if (!index.emplace(v.id, index.size()).second)
      throw Error(ErrorCode::DuplicateId, "vertex id '" + v.id + "' repeated");
  }
  std::vector<Edge> edges;
  edges.reserve(raw.edges.size());
  for (const auto& [a, b] : raw.edges) {
    const auto ia = index.find(a);
    const auto ib = index.find(b);
    if (ia == index.end() || ib == index.end())
      throw Error(ErrorCode::UnknownVertexInEdge, "edge [" + a + ", " + b + "] names an unknown vertex");
    edges.push_back({ia->second, ib->second});
  }
  return from_indexed(raw.vertices, std::move(edges));
}

std::optional<std::size_t> DecoratedGraph::find_vertex(std::string_view id) const noexcept {
  for (std::size_t i = 0; i < vertices_.size(); ++i) {
    if (vertices_[i].id == id) return i;
  }
  return std::nullopt;
}

std::size_t DecoratedGraph::vertex_index(std::string_view id) const {
  if (auto i = find_vertex(id)) return *i;
  throw Error(ErrorCode::UnknownVertex, "no vertex '" + std::string(id) + "'");
}

std::string DecoratedGraph::edge_label(std::size_t edge) { return "e" + std::to_string(edge + 1); }

std::size_t DecoratedGraph::edge_index(std::string_view label) const {
  std::size_t k = 0;
  if (label.size() >= 2 && label[0] == 'e') {
    const auto* first = label.data() + 1;
    const auto* last = label.data() + label.size();
    auto [ptr, ec] = std::from_chars(first, last, k);
    if (ec == std::errc() && ptr == last && k >= 1 && k <= edges_.size()) return k - 1;
  }
  throw Error(ErrorCode::UnknownEdge, "no edge '" + std::string(label) + "'");
}

std::int64_t DecoratedGraph::valence(std::size_t i) const {
  std::int64_t d = 0;
  for (const auto& e : edges_) d += (e.u == i) + (e.v == i);
  return d;
}

std::vector<std::size_t> DecoratedGraph::incident_edges(std::size_t i) const {
  std::vector<std::size_t> out;
  for (std::size_t k = 0; k < edges_.size(); ++k) {
    if (edges_[k].u == i || edges_[k].v == i) out.push_back(k);
  }
  return out;
}

std::int64_t DecoratedGraph::multiplicity(std::size_t i, std::size_t j) const {
  std::int64_t m = 0;
  for (const auto& e : edges_) m += (e.u == i && e.v == j) || (e.u == j && e.v == i);
  return m;
}

std::string DecoratedGraph::fresh_vertex_id() const {
  for (std::size_t k = 1;; ++k) {
    std::string id = "E" + std::to_string(k);
    if (!find_vertex(id)) return id;
  }
}

RawGraph DecoratedGraph::to_raw() const {
  RawGraph raw{vertices_, {}};
  for (const auto& e : edges_) raw.edges.emplace_back(vertices_[e.u].id, vertices_[e.v].id);
  return raw;
}

SymmetricIntMatrix::SymmetricIntMatrix(std::size_t n, std::vector<std::int64_t> entries)
    : n_(n), entries_(std::move(entries)) {
  if (entries_.size() != n_ * n_) throw Error(ErrorCode::NotSymmetric, "entry count is not n*n");
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t j = i + 1; j < n_; ++j) {
      if ((*this)(i, j) != (*this)(j, i)) throw Error(ErrorCode::NotSymmetric, "matrix is not symmetric");
    }
  }
}

RationalVector SymmetricIntMatrix::multiply(const RationalVector& z) const {
  RationalVector out(n_);
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t j = 0; j < n_; ++j) out[i] += (*this)(i, j) * z.at(j);
  }
  return out;
}

std::string_view to_string(SignClass c) noexcept {
  switch (c) {
    case SignClass::NonNegative: return "NonNegative";
    case SignClass::NonPositive: return "NonPositive";
    case SignClass::Positive: return "Positive";
    case SignClass::Negative: return "Negative";
    case SignClass::Mixed: return "Mixed";
    case SignClass::Zero: return "Zero";
  }
  return "Mixed";
}

SymmetricIntMatrix intersection_matrix(const DecoratedGraph& g) {
  const auto n = g.vertex_count();
  std::vector<std::int64_t> q(n * n, 0);
  for (std::size_t i = 0; i < n; ++i) q[i * n + i] = g.vertex(i).self_intersection;
  for (const auto& e : g.edges()) {
    ++q[e.u * n + e.v];
    ++q[e.v * n + e.u];
  }
  return SymmetricIntMatrix(n, std::move(q));
}

Inertia inertia(const SymmetricIntMatrix& m) {
  const auto n = m.dimension();
  std::vector<std::vector<Rational>> a(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a[i][j] = m(i, j);

  auto swap_index = [&](std::size_t p, std::size_t q) {
    if (p == q) return;
    std::swap(a[p], a[q]);
    for (auto& row : a) std::swap(row[p], row[q]);
  };

  Inertia result;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t pivot = n;
    for (std::size_t p = k; p < n; ++p) {
      if (a[p][p] != 0) {
        pivot = p;
        break;
      }
    }
    if (pivot == n) {
      // Zero diagonal: row/column j added into i makes a_ii = 2 a_ij.
      std::size_t pi = n, pj = n;
      for (std::size_t i = k; i < n && pi == n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
          if (a[i][j] != 0) {
            pi = i;
            pj = j;
            break;
          }
        }
      }
      if (pi == n) {
        result.b_zero += n - k;
        break;
      }
      for (std::size_t c = 0; c < n; ++c) a[pi][c] += a[pj][c];
      for (std::size_t r = 0; r < n; ++r) a[r][pi] += a[r][pj];
      pivot = pi;
    }
    swap_index(k, pivot);
    const Rational d = a[k][k];
    for (std::size_t r = k + 1; r < n; ++r) {
      if (a[r][k] == 0) continue;
      const Rational f = a[r][k] / d;
      for (std::size_t c = k; c < n; ++c) a[r][c] -= f * a[k][c];
      for (std::size_t c = k; c < n; ++c) a[c][r] = a[r][c];
    }
    if (d > 0) {
      ++result.b_plus;
    } else {
      ++result.b_minus;
    }
  }
  return result;
}

SignClass sign_class(const DecoratedGraph& g) {
  bool any_pos = false, any_neg = false, any_zero = false;
  for (std::size_t i = 0; i < g.vertex_count(); ++i) {
    const auto t = g.vertex(i).self_intersection + g.valence(i);
    any_pos |= t > 0;
    any_neg |= t < 0;
    any_zero |= t == 0;
  }
  if (!any_pos && !any_neg) return SignClass::Zero;
  if (any_pos && any_neg) return SignClass::Mixed;
  if (any_pos) return any_zero ? SignClass::NonNegative : SignClass::Positive;
  return any_zero ? SignClass::NonPositive : SignClass::Negative;
}

std::optional<std::vector<std::size_t>> circular_order(const DecoratedGraph& g) {
  const auto n = g.vertex_count();
  if (n < 2) return std::nullopt;
  for (const auto& v : g.vertices()) {
    if (v.genus != 0) return std::nullopt;
  }
  if (n == 2) {
    if (g.edge_count() != 2) return std::nullopt;
    return std::vector<std::size_t>{0, 1};
  }
  for (std::size_t i = 0; i < n; ++i) {
    const auto inc = g.incident_edges(i);
    if (inc.size() != 2) return std::nullopt;
    if (g.edges()[inc[0]].other(i) == g.edges()[inc[1]].other(i)) return std::nullopt;
  }
  // Connected and 2-regular without parallel edges: a single cycle.
  std::vector<std::size_t> order{0};
  std::size_t prev_edge = g.incident_edges(0).front();
  std::size_t current = g.edges()[prev_edge].other(0);
  while (current != 0) {
    order.push_back(current);
    const auto inc = g.incident_edges(current);
    const auto next_edge = inc[0] == prev_edge ? inc[1] : inc[0];
    current = g.edges()[next_edge].other(current);
    prev_edge = next_edge;
  }
  return order;
}

std::optional<std::vector<std::int64_t>> circular_sequence(const DecoratedGraph& g) {
  auto order = circular_order(g);
  if (!order) return std::nullopt;
  std::vector<std::int64_t> s;
  s.reserve(order->size());
  for (auto i : *order) s.push_back(g.vertex(i).self_intersection);
  return s;
}

DecoratedGraph make_cycle(const std::vector<std::int64_t>& self_intersections) {
  const auto l = self_intersections.size();
  if (l < 2) throw Error(ErrorCode::TooShort, "a circular divisor needs at least two spheres");
  std::vector<VertexData> vertices;
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < l; ++i) {
    vertices.push_back({"v" + std::to_string(i + 1), 0, self_intersections[i]});
    edges.push_back({i, (i + 1) % l});
  }
  return DecoratedGraph::from_indexed(std::move(vertices), std::move(edges));
}

DecoratedGraph make_chain(const std::vector<std::int64_t>& self_intersections) {
  std::vector<VertexData> vertices;
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < self_intersections.size(); ++i) {
    vertices.push_back({"v" + std::to_string(i + 1), 0, self_intersections[i]});
    if (i > 0) edges.push_back({i - 1, i});
  }
  return DecoratedGraph::from_indexed(std::move(vertices), std::move(edges));
}

namespace {

// Color refinement followed by backtracking over orderings that respect the
// refined color classes; the lexicographically least encoding wins.
class Canonicalizer {
 public:
  explicit Canonicalizer(const DecoratedGraph& g) : g_(g), n_(g.vertex_count()), adj_(n_ * n_, 0) {
    for (const auto& e : g.edges()) {
      ++adj_[e.u * n_ + e.v];
      ++adj_[e.v * n_ + e.u];
    }
  }

  std::vector<std::int64_t> run() {
    std::vector<std::size_t> colors = refine(initial_colors());
    std::vector<std::size_t> order;
    std::vector<bool> used(n_, false);
    search(colors, order, used);
    return best_;
  }

 private:
  std::vector<std::size_t> initial_colors() const {
    std::map<std::pair<std::int64_t, std::int64_t>, std::size_t> ids;
    for (const auto& v : g_.vertices()) ids.emplace(std::make_pair(v.genus, v.self_intersection), 0);
    std::size_t next = 0;
    for (auto& [key, id] : ids) id = next++;
    std::vector<std::size_t> c(n_);
    for (std::size_t i = 0; i < n_; ++i)
      c[i] = ids.at({g_.vertex(i).genus, g_.vertex(i).self_intersection});
    return c;
  }

  std::vector<std::size_t> refine(std::vector<std::size_t> colors) const {
    for (;;) {
      using Signature = std::pair<std::size_t, std::vector<std::pair<std::size_t, std::int64_t>>>;
      std::vector<Signature> sig(n_);
      for (std::size_t i = 0; i < n_; ++i) {
        sig[i].first = colors[i];
        std::map<std::size_t, std::int64_t> counts;
        for (std::size_t j = 0; j < n_; ++j) {
          if (adj_[i * n_ + j] > 0) counts[colors[j]] += adj_[i * n_ + j];
        }
        sig[i].second.assign(counts.begin(), counts.end());
      }
      std::map<Signature, std::size_t> ids;
      for (const auto& s : sig) ids.emplace(s, 0);
      std::size_t next = 0;
      for (auto& [key, id] : ids) id = next++;
      std::vector<std::size_t> refined(n_);
      for (std::size_t i = 0; i < n_; ++i) refined[i] = ids.at(sig[i]);
      const auto count = [](const std::vector<std::size_t>& c) {
        return std::set<std::size_t>(c.begin(), c.end()).size();
      };
      if (count(refined) == count(colors)) return refined;
      colors = std::move(refined);
    }
  }

  std::vector<std::int64_t> encode(const std::vector<std::size_t>& order) const {
    std::vector<std::int64_t> code;
    code.reserve(2 * n_ + n_ * n_);
    code.push_back(static_cast<std::int64_t>(n_));
    for (auto i : order) {
      code.push_back(g_.vertex(i).genus);
      code.push_back(g_.vertex(i).self_intersection);
    }
    for (std::size_t a = 0; a < n_; ++a)
      for (std::size_t b = a + 1; b < n_; ++b) code.push_back(adj_[order[a] * n_ + order[b]]);
    return code;
  }

  // Vertices are placed in nondecreasing color order, so only members of the
  // smallest unplaced color class are candidates at each depth.
  void search(const std::vector<std::size_t>& colors, std::vector<std::size_t>& order, std::vector<bool>& used) {
    if (order.size() == n_) {
      auto code = encode(order);
      if (best_.empty() || code < best_) best_ = std::move(code);
      return;
    }
    std::size_t min_color = SIZE_MAX;
    for (std::size_t i = 0; i < n_; ++i)
      if (!used[i]) min_color = std::min(min_color, colors[i]);
    for (std::size_t i = 0; i < n_; ++i) {
      if (used[i] || colors[i] != min_color) continue;
      used[i] = true;
      order.push_back(i);
      search(colors, order, used);
      order.pop_back();
      used[i] = false;
    }
  }

  const DecoratedGraph& g_;
  std::size_t n_;
  std::vector<std::int64_t> adj_;
  std::vector<std::int64_t> best_;
};

}  // namespace

std::vector<std::int64_t> canonical_code(const DecoratedGraph& g) { return Canonicalizer(g).run(); }

}  // namespace plumb
