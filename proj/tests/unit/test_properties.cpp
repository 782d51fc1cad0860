#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "plumb/gs.hpp"
#include "plumb/moves.hpp"
#include "plumb/open_book.hpp"
#include "plumb/torus.hpp"

using namespace plumb;

// Cross-module properties on seeded random inputs.

TEST_CASE("toric blow-up keeps b_plus and adds one negative direction") {
  std::mt19937_64 rng(61);
  for (int trial = 0; trial < 200; ++trial) {
    const auto g = oracle::random_graph(rng, 6, -3, 3);
    if (g.edge_count() == 0) continue;
    const auto e = std::uniform_int_distribution<std::size_t>(0, g.edge_count() - 1)(rng);
    const auto before = oracle::eigen_signature(oracle::dense(g));
    const auto after = inertia(intersection_matrix(toric_blowup(g, e)));
    CHECK(after.b_plus == before.plus);
    CHECK(after.b_minus == before.minus + 1);
    CHECK(after.b_zero == before.zero);
  }
}

TEST_CASE("toric blow-downs keep cycles non-negative") {
  for (std::size_t l = 3; l <= 5; ++l) {
    oracle::for_each_sequence(l, -2, 2, [](const std::vector<std::int64_t>& s) {
      const auto g = make_cycle(s);
      if (!oracle::nonnegative(oracle::dot_products(g))) return;
      for (const auto& m : applicable_blowdowns(g)) {
        if (m.kind != MoveKind::ToricDown) continue;
        CHECK(oracle::nonnegative(oracle::dot_products(apply_move(g, m))));
      }
    });
  }
}

TEST_CASE("open book letter counts match the divisor word") {
  for (std::size_t l = 2; l <= 4; ++l) {
    oracle::for_each_sequence(l, -2, 3, [](const std::vector<std::int64_t>& s) {
      const auto g = make_cycle(s);
      if (!is_nonnegative(sign_class(g))) return;
      const auto ob = build_open_book(g, Side::Concave);
      const auto w = word_of_divisor(s);
      std::size_t a_count = 0, b_count = 0;
      for (auto x : w) (x == Letter::AInv ? a_count : b_count)++;
      CHECK(static_cast<std::int64_t>(b_count) == ob.binding_count);
      CHECK(a_count == ob.neck_curves.size());
    });
  }
}

TEST_CASE("constructive and LP witnesses agree on feasibility for non-negative graphs") {
  std::mt19937_64 rng(62);
  int seen = 0;
  for (int trial = 0; trial < 3000 && seen < 150; ++trial) {
    const auto g = oracle::random_graph(rng, 5, -3, 2, 1, 3);
    if (!is_nonnegative(sign_class(g))) continue;
    ++seen;
    const auto lp = check_gs(g, GSMode::Concave);
    REQUIRE(lp);
    const auto c = nonnegative_witness(g);
    CHECK(oracle::q_times(g, lp->z) == lp->a);
    CHECK(oracle::q_times(g, c.witness.z) == c.witness.a);
  }
  CHECK(seen > 50);
}

TEST_CASE("trace is invariant under cyclic permutation") {
  std::mt19937_64 rng(63);
  for (int trial = 0; trial < 300; ++trial) {
    const auto w = oracle::random_word(rng, 12);
    if (w.empty()) continue;
    const auto k = std::uniform_int_distribution<std::ptrdiff_t>(0, static_cast<std::ptrdiff_t>(w.size()))(rng);
    CHECK(phi(rewrite(w, CyclicPermute{k})).trace() == phi(w).trace());
  }
}
