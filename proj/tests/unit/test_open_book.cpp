#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "plumb/error.hpp"
#include "plumb/moves.hpp"
#include "plumb/open_book.hpp"

using namespace plumb;

namespace {

DecoratedGraph triangle() {
  return DecoratedGraph::from_raw({{{"v1", 1, 1}, {"v2", 0, -2}, {"v3", 2, 2}}, {{"v1", "v2"}, {"v2", "v3"}, {"v3", "v1"}}});
}

std::vector<std::int64_t> entries_of(const TwistDistribution& d, std::size_t vertex, bool multiplicity) {
  std::vector<std::int64_t> out;
  for (const auto& e : d.entries)
    if (e.vertex == vertex) out.push_back(multiplicity ? e.multiplicity : e.s);
  return out;
}

}  // namespace

TEST_CASE("distribute_twists examples") {
  const auto d = distribute_twists(triangle(), Side::Concave);
  CHECK(entries_of(d, 0, false) == std::vector<std::int64_t>{2, -1});
  CHECK(entries_of(d, 0, true) == std::vector<std::int64_t>{3, 0});

  // Middle vertex of a (-1)-(-3)-(-1) chain has s = -3, d = 2.
  const auto convex = distribute_twists(make_chain({-1, -3, -1}), Side::Convex);
  CHECK(entries_of(convex, 1, false) == std::vector<std::int64_t>{-2, -1});
  CHECK(entries_of(convex, 1, true) == std::vector<std::int64_t>{1, 0});

  const auto c = distribute_twists(make_cycle({-1, -1, -1}), Side::Concave);
  CHECK(entries_of(c, 0, false) == std::vector<std::int64_t>{0, -1});
  CHECK(entries_of(c, 0, true) == std::vector<std::int64_t>{1, 0});
}

TEST_CASE("distribute_twists invariants on random graphs") {
  std::mt19937_64 rng(41);
  int built = 0;
  for (int trial = 0; trial < 600; ++trial) {
    const auto g = oracle::random_graph(rng, 6, -4, 3);
    for (auto side : {Side::Concave, Side::Convex}) {
      const auto c = sign_class(g);
      const bool ok = side == Side::Concave ? is_nonnegative(c) : (is_nonpositive(c) || c == SignClass::Zero);
      if (!ok) {
        CHECK_THROWS_AS(distribute_twists(g, side), Error);
        continue;
      }
      ++built;
      const auto d = distribute_twists(g, side);
      for (std::size_t i = 0; i < g.vertex_count(); ++i) {
        std::int64_t total = 0;
        for (auto s : entries_of(d, i, false)) total += s;
        if (g.valence(i) > 0) CHECK(total == g.vertex(i).self_intersection);
      }
      for (const auto& e : d.entries) CHECK(e.multiplicity >= 0);
    }
  }
  CHECK(built > 50);
}

TEST_CASE("side mismatch") {
  try {
    build_open_book(triangle(), Side::Convex);
    FAIL("expected SideMismatch");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::SideMismatch);
  }
  CHECK_THROWS_AS(build_open_book(make_chain({-2, -2}), Side::Concave), Error);
  CHECK_NOTHROW(build_open_book(make_cycle({-2, -2}), Side::Convex));
}

TEST_CASE("triangle open book") {
  const auto ob = build_open_book(triangle(), Side::Concave);
  CHECK(ob.page_genus == 4);
  CHECK(ob.binding_count == 7);
  REQUIRE(ob.monodromy.size() == 10);
  for (std::size_t k = 0; k < 3; ++k) CHECK(ob.monodromy[k].sign == -1);
  for (std::size_t k = 3; k < 10; ++k) CHECK(ob.monodromy[k].sign == 1);
  CHECK(ob.monodromy[0] == DehnTwist{"g:e1", -1});
  CHECK(ob.monodromy[3] == DehnTwist{"d:v1:1", 1});
  CHECK(page_invariants(ob) == PageInvariants{4, 7, -13});
}

TEST_CASE("cycle (0,0) and a convex sphere") {
  const auto ob = build_open_book(make_cycle({0, 0}), Side::Concave);
  CHECK(page_invariants(ob) == PageInvariants{1, 4, -4});
  CHECK(ob.monodromy.size() == 6);

  const auto s = build_open_book(DecoratedGraph::from_raw({{{"v1", 0, -2}}, {}}), Side::Convex);
  CHECK(page_invariants(s) == PageInvariants{0, 2, 0});
  CHECK(s.neck_curves.empty());
  REQUIRE(s.monodromy.size() == 2);
  CHECK(s.monodromy[0].sign == 1);
  CHECK(s.monodromy[1].sign == 1);

  const auto conv = build_open_book(make_cycle({-3, -3}), Side::Convex);
  for (std::size_t k = 0; k < conv.neck_curves.size(); ++k) CHECK(conv.monodromy[k].sign == 1);
}

TEST_CASE("page_invariants detects inconsistencies") {
  OpenBookDescription disk;
  disk.side = Side::Concave;
  disk.binding_count = 1;
  disk.boundary_curves = {"d:v1:1"};
  disk.monodromy = {{"d:v1:1", 1}};
  disk.pieces = {{"v1", 0, 1}};
  CHECK(page_invariants(disk).euler_characteristic == 1);

  auto bad = build_open_book(triangle(), Side::Concave);
  bad.page_genus = 5;
  CHECK_THROWS_AS(page_invariants(bad), Error);
  bad = build_open_book(triangle(), Side::Concave);
  bad.monodromy.pop_back();
  CHECK_THROWS_AS(page_invariants(bad), Error);
  bad = build_open_book(triangle(), Side::Concave);
  std::swap(bad.monodromy[0], bad.monodromy[5]);
  try {
    page_invariants(bad);
    FAIL("expected InconsistentPage");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::InconsistentPage);
  }
}

TEST_CASE("toric blow-up adds one neck and removes one binding") {
  std::mt19937_64 rng(42);
  int checked = 0;
  for (int trial = 0; trial < 400 && checked < 100; ++trial) {
    std::vector<std::int64_t> s(std::uniform_int_distribution<std::size_t>(2, 6)(rng));
    for (auto& x : s) x = std::uniform_int_distribution<int>(-1, 3)(rng);
    const auto g = make_cycle(s);
    if (!is_nonnegative(sign_class(g))) continue;
    const auto e = std::uniform_int_distribution<std::size_t>(0, g.edge_count() - 1)(rng);
    const auto h = toric_blowup(g, e);
    if (!is_nonnegative(sign_class(h))) continue;
    ++checked;
    const auto a = build_open_book(g, Side::Concave);
    const auto b = build_open_book(h, Side::Concave);
    CHECK(b.neck_curves.size() == a.neck_curves.size() + 1);
    CHECK(b.binding_count == a.binding_count - 1);
    CHECK(b.page_genus == a.page_genus);
  }
  CHECK(checked > 20);
}
