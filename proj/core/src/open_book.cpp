#include "plumb/open_book.hpp"

#include "plumb/error.hpp"

namespace plumb {

namespace {

void require_side(const DecoratedGraph& g, Side side) {
  const auto c = sign_class(g);
  const bool ok = side == Side::Concave ? is_nonnegative(c) : (is_nonpositive(c) || c == SignClass::Zero);
  if (!ok)
    throw Error(ErrorCode::SideMismatch,
                "sign class " + std::string(to_string(c)) + " admits no " + std::string(to_string(side)) + " open book");
}

std::int64_t boundary_of(const DecoratedGraph& g, std::size_t i, Side side) {
  const auto t = g.vertex(i).self_intersection + g.valence(i);
  return side == Side::Concave ? t : -t;
}

}  // namespace

TwistDistribution distribute_twists(const DecoratedGraph& g, Side side) {
  require_side(g, side);
  TwistDistribution dist{side, {}};
  for (std::size_t i = 0; i < g.vertex_count(); ++i) {
    const auto incident = g.incident_edges(i);
    const auto s_i = g.vertex(i).self_intersection;
    const auto d_i = static_cast<std::int64_t>(incident.size());
    std::int64_t blocks = 0;
    for (std::size_t k = 0; k < incident.size(); ++k) {
      const std::int64_t s = k == 0 ? s_i + d_i - 1 : -1;
      const std::int64_t m = side == Side::Concave ? s + 1 : -s - 1;
      dist.entries.push_back({i, incident[k], s, m});
      blocks += m;
    }
    // Building blocks on the edges of v_i supply exactly its binding components.
    if (d_i > 0 && blocks != boundary_of(g, i, side))
      throw Error(ErrorCode::InconsistentPage, "block count mismatch at '" + g.vertex(i).id + "'");
  }
  return dist;
}

OpenBookDescription build_open_book(const DecoratedGraph& g, Side side) {
  distribute_twists(g, side);
  OpenBookDescription ob;
  ob.side = side;
  const auto l = static_cast<std::int64_t>(g.edge_count());
  const auto betti = l - static_cast<std::int64_t>(g.vertex_count()) + 1;
  ob.page_genus = betti;
  for (std::size_t i = 0; i < g.vertex_count(); ++i) {
    const auto& v = g.vertex(i);
    ob.page_genus += v.genus;
    const auto b = boundary_of(g, i, side);
    ob.pieces.push_back({v.id, v.genus, b});
    for (std::int64_t k = 1; k <= b; ++k) ob.boundary_curves.push_back("d:" + v.id + ":" + std::to_string(k));
  }
  ob.binding_count = static_cast<std::int64_t>(ob.boundary_curves.size());
  const int neck_sign = side == Side::Concave ? -1 : 1;
  for (std::size_t e = 0; e < g.edge_count(); ++e) {
    ob.neck_curves.push_back("g:" + DecoratedGraph::edge_label(e));
    ob.monodromy.push_back({ob.neck_curves.back(), neck_sign});
  }
  for (const auto& c : ob.boundary_curves) ob.monodromy.push_back({c, 1});
  page_invariants(ob);
  return ob;
}

PageInvariants page_invariants(const OpenBookDescription& ob) {
  auto fail = [](const std::string& why) { throw Error(ErrorCode::InconsistentPage, why); };
  const auto l = static_cast<std::int64_t>(ob.neck_curves.size());
  std::int64_t chi_pieces = 0, boundary = 0, genus = 0;
  for (const auto& p : ob.pieces) {
    chi_pieces += 2 - 2 * p.genus - p.boundary;
    boundary += p.boundary;
    genus += p.genus;
  }
  const PageInvariants inv{ob.page_genus, ob.binding_count, 2 - 2 * ob.page_genus - ob.binding_count};
  if (boundary != ob.binding_count || static_cast<std::int64_t>(ob.boundary_curves.size()) != ob.binding_count)
    fail("binding count disagrees with the page pieces");
  if (inv.euler_characteristic != chi_pieces - 2 * l) fail("Euler characteristic disagrees with the connect sum");
  const auto pieces = static_cast<std::int64_t>(ob.pieces.size());
  if (ob.page_genus != genus + l - pieces + 1) fail("page genus disagrees with the connect sum");
  if (static_cast<std::int64_t>(ob.monodromy.size()) != l + ob.binding_count) fail("monodromy length is not l + q");
  const int neck_sign = ob.side == Side::Concave ? -1 : 1;
  for (std::size_t k = 0; k < ob.monodromy.size(); ++k) {
    const bool neck = k < ob.neck_curves.size();
    const auto& expected = neck ? ob.neck_curves[k] : ob.boundary_curves[k - ob.neck_curves.size()];
    if (ob.monodromy[k].curve != expected || ob.monodromy[k].sign != (neck ? neck_sign : 1))
      fail("monodromy is not necks followed by boundary twists");
  }
  return inv;
}

}  // namespace plumb
