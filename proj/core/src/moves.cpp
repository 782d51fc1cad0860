#include "plumb/moves.hpp"

#include <deque>
#include <map>
#include <set>
#include <stdexcept>

#include "plumb/error.hpp"

namespace plumb {

AugmentedGraph::AugmentedGraph(DecoratedGraph graph, RationalVector area, std::optional<RationalVector> witness)
    : graph_(std::move(graph)), area_(std::move(area)), witness_(std::move(witness)) {
  const auto n = graph_.vertex_count();
  if (area_.size() != n) throw Error(ErrorCode::NonPositiveArea, "area vector length differs from vertex count");
  for (std::size_t i = 0; i < n; ++i) {
    if (area_[i] <= 0)
      throw Error(ErrorCode::NonPositiveArea, "area of '" + graph_.vertex(i).id + "' is " + to_string(area_[i]));
  }
  if (witness_) {
    if (witness_->size() != n) throw Error(ErrorCode::WitnessMismatch, "witness length differs from vertex count");
    if (intersection_matrix(graph_).multiply(*witness_) != area_)
      throw Error(ErrorCode::WitnessMismatch, "Q z differs from the area vector");
  }
}

std::string_view to_string(MoveKind kind) noexcept {
  switch (kind) {
    case MoveKind::ToricUp: return "toric_up";
    case MoveKind::ToricDown: return "toric_down";
    case MoveKind::InteriorUp: return "interior_up";
    case MoveKind::InteriorDown: return "interior_down";
  }
  return "toric_up";
}

MoveRecord parse_move(std::string_view spec) {
  auto fail = [&](const std::string& why) -> MoveRecord {
    throw Error(ErrorCode::MalformedMove, "'" + std::string(spec) + "': " + why);
  };
  const auto c1 = spec.find(':');
  if (c1 == std::string_view::npos) return fail("expected KIND:SITE[:w=WEIGHT]");
  const auto kind_text = spec.substr(0, c1);
  auto rest = spec.substr(c1 + 1);
  MoveRecord move;
  static const std::map<std::string_view, MoveKind> kinds{{"toric_up", MoveKind::ToricUp},
                                                         {"toric_down", MoveKind::ToricDown},
                                                         {"interior_up", MoveKind::InteriorUp},
                                                         {"interior_down", MoveKind::InteriorDown}};
  const auto it = kinds.find(kind_text);
  if (it == kinds.end()) return fail("unknown move kind '" + std::string(kind_text) + "'");
  move.kind = it->second;
  const auto c2 = rest.find(':');
  move.site = std::string(rest.substr(0, c2));
  if (move.site.empty()) return fail("empty site");
  if (c2 != std::string_view::npos) {
    const auto weight = rest.substr(c2 + 1);
    if (weight.substr(0, 2) != "w=") return fail("expected w=WEIGHT");
    try {
      move.weight = parse_rational(weight.substr(2));
    } catch (const std::invalid_argument& e) {
      return fail(e.what());
    }
  }
  return move;
}

std::string format_move(const MoveRecord& move) {
  std::string out = std::string(to_string(move.kind)) + ":" + move.site;
  if (move.weight) out += ":w=" + to_string(*move.weight);
  return out;
}

bool is_exceptional(const VertexData& v) noexcept { return v.genus == 0 && v.self_intersection == -1; }

bool is_toric_minimal(const DecoratedGraph& g) {
  for (const auto& v : g.vertices()) {
    if (is_exceptional(v)) return false;
  }
  return true;
}

DecoratedGraph toric_blowup(const DecoratedGraph& g, std::size_t edge) {
  if (edge >= g.edge_count()) throw Error(ErrorCode::UnknownEdge, "edge index out of range");
  auto vertices = g.vertices();
  auto edges = g.edges();
  const auto [i, j] = edges[edge];
  const auto e = vertices.size();
  vertices.push_back({g.fresh_vertex_id(), 0, -1});
  --vertices[i].self_intersection;
  --vertices[j].self_intersection;
  edges[edge] = {i, e};
  edges.insert(edges.begin() + static_cast<std::ptrdiff_t>(edge) + 1, Edge{e, j});
  return DecoratedGraph::from_indexed(std::move(vertices), std::move(edges));
}

namespace {

void require_exceptional(const DecoratedGraph& g, std::size_t v) {
  if (v >= g.vertex_count()) throw Error(ErrorCode::UnknownVertex, "vertex index out of range");
  if (!is_exceptional(g.vertex(v)))
    throw Error(ErrorCode::NotExceptional, "'" + g.vertex(v).id + "' is not a genus 0, s = -1 sphere");
}

// Removes vertex v from the list and renumbers edge endpoints.
DecoratedGraph remove_vertex(std::vector<VertexData> vertices, std::vector<Edge> edges, std::size_t v) {
  vertices.erase(vertices.begin() + static_cast<std::ptrdiff_t>(v));
  for (auto& e : edges) {
    if (e.u > v) --e.u;
    if (e.v > v) --e.v;
  }
  return DecoratedGraph::from_indexed(std::move(vertices), std::move(edges));
}

}  // namespace

DecoratedGraph toric_blowdown(const DecoratedGraph& g, std::size_t vertex) {
  require_exceptional(g, vertex);
  const auto inc = g.incident_edges(vertex);
  if (inc.size() != 2)
    throw Error(ErrorCode::WrongValence, "'" + g.vertex(vertex).id + "' has valence " + std::to_string(inc.size()));
  const auto p = g.edges()[inc[0]].other(vertex);
  const auto q = g.edges()[inc[1]].other(vertex);
  if (p == q)
    throw Error(ErrorCode::SameNeighbor, "both edges of '" + g.vertex(vertex).id + "' end at '" + g.vertex(p).id + "'");
  auto vertices = g.vertices();
  auto edges = g.edges();
  ++vertices[p].self_intersection;
  ++vertices[q].self_intersection;
  edges[inc[0]] = {p, q};
  edges.erase(edges.begin() + static_cast<std::ptrdiff_t>(inc[1]));
  return remove_vertex(std::move(vertices), std::move(edges), vertex);
}

DecoratedGraph interior_blowup(const DecoratedGraph& g, std::size_t vertex) {
  if (vertex >= g.vertex_count()) throw Error(ErrorCode::UnknownVertex, "vertex index out of range");
  auto vertices = g.vertices();
  auto edges = g.edges();
  const auto e = vertices.size();
  vertices.push_back({g.fresh_vertex_id(), 0, -1});
  --vertices[vertex].self_intersection;
  edges.push_back({vertex, e});
  return DecoratedGraph::from_indexed(std::move(vertices), std::move(edges));
}

DecoratedGraph interior_blowdown(const DecoratedGraph& g, std::size_t vertex) {
  require_exceptional(g, vertex);
  const auto inc = g.incident_edges(vertex);
  if (inc.size() != 1)
    throw Error(ErrorCode::WrongValence, "'" + g.vertex(vertex).id + "' has valence " + std::to_string(inc.size()));
  const auto p = g.edges()[inc[0]].other(vertex);
  auto vertices = g.vertices();
  auto edges = g.edges();
  ++vertices[p].self_intersection;
  edges.erase(edges.begin() + static_cast<std::ptrdiff_t>(inc[0]));
  return remove_vertex(std::move(vertices), std::move(edges), vertex);
}

namespace {

void require_positive(const Rational& w) {
  if (w <= 0) throw Error(ErrorCode::NonPositiveWeight, "weight " + to_string(w) + " is not positive");
}

void require_below(const Rational& w, const Rational& bound, const std::string& what) {
  if (w >= bound)
    throw Error(ErrorCode::WeightTooLarge, "weight " + to_string(w) + " must be below " + what + " = " + to_string(bound));
}

template <class T>
std::vector<T> erase_index(std::vector<T> v, std::size_t i) {
  v.erase(v.begin() + static_cast<std::ptrdiff_t>(i));
  return v;
}

}  // namespace

AugmentedGraph augmented_toric_blowup(const AugmentedGraph& ag, std::size_t edge, const Rational& weight) {
  const auto& g = ag.graph();
  if (edge >= g.edge_count()) throw Error(ErrorCode::UnknownEdge, "edge index out of range");
  require_positive(weight);
  const auto [i, j] = g.edges()[edge];
  require_below(weight, ag.area()[i], "a(" + g.vertex(i).id + ")");
  require_below(weight, ag.area()[j], "a(" + g.vertex(j).id + ")");
  std::optional<RationalVector> z = ag.witness();
  if (z) {
    require_below(weight, (*z)[i] + (*z)[j], "z(" + g.vertex(i).id + ") + z(" + g.vertex(j).id + ")");
    z->push_back((*z)[i] + (*z)[j] - weight);
  }
  auto a = ag.area();
  a[i] -= weight;
  a[j] -= weight;
  a.push_back(weight);
  return AugmentedGraph(toric_blowup(g, edge), std::move(a), std::move(z));
}

AugmentedGraph augmented_toric_blowdown(const AugmentedGraph& ag, std::size_t vertex) {
  const auto& g = ag.graph();
  auto reduced = toric_blowdown(g, vertex);
  const auto inc = g.incident_edges(vertex);
  auto a = ag.area();
  a[g.edges()[inc[0]].other(vertex)] += a[vertex];
  a[g.edges()[inc[1]].other(vertex)] += a[vertex];
  std::optional<RationalVector> z;
  if (ag.witness()) z = erase_index(*ag.witness(), vertex);
  return AugmentedGraph(std::move(reduced), erase_index(std::move(a), vertex), std::move(z));
}

AugmentedGraph augmented_interior_blowup(const AugmentedGraph& ag, std::size_t vertex, const Rational& weight) {
  const auto& g = ag.graph();
  if (vertex >= g.vertex_count()) throw Error(ErrorCode::UnknownVertex, "vertex index out of range");
  require_positive(weight);
  require_below(weight, ag.area()[vertex], "a(" + g.vertex(vertex).id + ")");
  std::optional<RationalVector> z = ag.witness();
  if (z) z->push_back((*z)[vertex] - weight);
  auto a = ag.area();
  a[vertex] -= weight;
  a.push_back(weight);
  return AugmentedGraph(interior_blowup(g, vertex), std::move(a), std::move(z));
}

AugmentedGraph augmented_interior_blowdown(const AugmentedGraph& ag, std::size_t vertex) {
  const auto& g = ag.graph();
  auto reduced = interior_blowdown(g, vertex);
  auto a = ag.area();
  a[g.edges()[g.incident_edges(vertex)[0]].other(vertex)] += a[vertex];
  std::optional<RationalVector> z;
  if (ag.witness()) z = erase_index(*ag.witness(), vertex);
  return AugmentedGraph(std::move(reduced), erase_index(std::move(a), vertex), std::move(z));
}

DecoratedGraph apply_move(const DecoratedGraph& g, const MoveRecord& move) {
  if (move.weight) throw Error(ErrorCode::MalformedMove, format_move(move) + ": weighted move needs an area vector");
  switch (move.kind) {
    case MoveKind::ToricUp: return toric_blowup(g, g.edge_index(move.site));
    case MoveKind::ToricDown: return toric_blowdown(g, g.vertex_index(move.site));
    case MoveKind::InteriorUp: return interior_blowup(g, g.vertex_index(move.site));
    case MoveKind::InteriorDown: return interior_blowdown(g, g.vertex_index(move.site));
  }
  return g;
}

AugmentedGraph apply_move(const AugmentedGraph& ag, const MoveRecord& move) {
  const auto& g = ag.graph();
  const bool up = move.kind == MoveKind::ToricUp || move.kind == MoveKind::InteriorUp;
  if (up && !move.weight) throw Error(ErrorCode::MalformedMove, format_move(move) + ": augmented blow-up needs w=");
  if (!up && move.weight) throw Error(ErrorCode::MalformedMove, format_move(move) + ": blow-downs take no weight");
  switch (move.kind) {
    case MoveKind::ToricUp: return augmented_toric_blowup(ag, g.edge_index(move.site), *move.weight);
    case MoveKind::ToricDown: return augmented_toric_blowdown(ag, g.vertex_index(move.site));
    case MoveKind::InteriorUp: return augmented_interior_blowup(ag, g.vertex_index(move.site), *move.weight);
    case MoveKind::InteriorDown: return augmented_interior_blowdown(ag, g.vertex_index(move.site));
  }
  return ag;
}

std::vector<MoveRecord> applicable_blowdowns(const DecoratedGraph& g) {
  std::vector<MoveRecord> moves;
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    if (!is_exceptional(g.vertex(v))) continue;
    const auto inc = g.incident_edges(v);
    if (inc.size() == 1) {
      moves.push_back({MoveKind::InteriorDown, g.vertex(v).id, std::nullopt});
    } else if (inc.size() == 2 && g.edges()[inc[0]].other(v) != g.edges()[inc[1]].other(v)) {
      moves.push_back({MoveKind::ToricDown, g.vertex(v).id, std::nullopt});
    }
  }
  return moves;
}

std::vector<DecoratedGraph> minimal_models(const DecoratedGraph& g) {
  std::set<std::vector<std::int64_t>> seen{canonical_code(g)};
  std::map<std::vector<std::int64_t>, DecoratedGraph> terminals;
  std::deque<DecoratedGraph> queue{g};
  while (!queue.empty()) {
    auto current = std::move(queue.front());
    queue.pop_front();
    const auto moves = applicable_blowdowns(current);
    if (moves.empty()) {
      terminals.emplace(canonical_code(current), current);
      continue;
    }
    for (const auto& m : moves) {
      auto next = apply_move(current, m);
      if (seen.insert(canonical_code(next)).second) queue.push_back(std::move(next));
    }
  }
  std::vector<DecoratedGraph> out;
  for (auto& [code, graph] : terminals) out.push_back(std::move(graph));
  return out;
}

std::optional<Representative> nonnegative_representative(const DecoratedGraph& g) {
  std::set<std::vector<std::int64_t>> seen{canonical_code(g)};
  std::deque<Representative> queue{Representative{g, {}}};
  while (!queue.empty()) {
    auto current = std::move(queue.front());
    queue.pop_front();
    if (is_nonnegative(sign_class(current.graph))) return current;
    for (const auto& m : applicable_blowdowns(current.graph)) {
      auto next = apply_move(current.graph, m);
      if (!seen.insert(canonical_code(next)).second) continue;
      auto moves = current.moves;
      moves.push_back(m);
      queue.push_back(Representative{std::move(next), std::move(moves)});
    }
  }
  return std::nullopt;
}

}  // namespace plumb
