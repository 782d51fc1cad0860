// Acceptance run: one PASS/FAIL line per criterion, with measured time against
// the allowed budget. Exit status is nonzero if any criterion fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "plumb/error.hpp"
#include "plumb/gs.hpp"
#include "plumb/moves.hpp"
#include "plumb/open_book.hpp"
#include "plumb/torus.hpp"

using namespace plumb;

namespace {

constexpr Letter A = Letter::AInv, B = Letter::BInv;

struct Result {
  bool ok = true;
  std::string detail;
};

// Records the first few failures; later ones only flip ok.
class Tally {
 public:
  void check(bool cond, const std::string& what) {
    ++checks_;
    if (cond) return;
    if (ok_ && first_.empty()) first_ = what;
    ok_ = false;
    ++failures_;
  }
  Result result(const std::string& summary) const {
    std::ostringstream s;
    s << summary << "; " << checks_ << " checks";
    if (!ok_) s << ", " << failures_ << " failed, first: " << first_;
    return {ok_, s.str()};
  }

 private:
  bool ok_ = true;
  long checks_ = 0, failures_ = 0;
  std::string first_;
};

Word power(Letter x, std::int64_t n) { return Word(static_cast<std::size_t>(n), x); }

Word cat(std::initializer_list<Word> parts) {
  Word out;
  for (const auto& p : parts) out.insert(out.end(), p.begin(), p.end());
  return out;
}

std::string vec(const Vec2& v) { return "(" + std::to_string(v.x) + "," + std::to_string(v.y) + ")"; }

std::string seq_text(const std::vector<std::int64_t>& s) {
  std::string out = "(";
  for (std::size_t i = 0; i < s.size(); ++i) out += (i ? "," : "") + std::to_string(s[i]);
  return out + ")";
}

Result matrix_oracle() {
  Tally t;
  for (std::int64_t n = 2; n <= 10; ++n) {
    const auto w = cat({{B}, power(A, n), {B}});
    const auto v = phi(w) * Vec2{1, 0};
    const auto o = oracle::apply(w, {1, 0});
    t.check(v == Vec2{1 - n, 2 - n} && o[0] == 1 - n && o[1] == 2 - n, "n=" + std::to_string(n) + " gave " + vec(v));
  }
  for (std::int64_t l = 1; l <= 5; ++l)
    for (std::int64_t m = 0; m <= 5; ++m) {
      const auto w = cat({{B}, power(A, l), power(B, m), {A, B}});
      const auto v = phi(w) * Vec2{1, 0};
      t.check(v == Vec2{-l, 1 - l} && rotation(w).end == v,
              "l=" + std::to_string(l) + ",m=" + std::to_string(m) + " gave " + vec(v));
    }
  return t.result("b^-1 a^-n b^-1 for n=2..10 and b^-1 a^-l b^-m a^-1 b^-1 for l=1..5, m=0..5");
}

Result parabolic_family() {
  Tally t;
  for (std::int64_t n = -2; n <= 10; ++n) {
    const auto w = word_of_divisor({n, 0});
    const auto permuted = rewrite(w, CyclicPermute{-2});
    t.check(permuted == cat({{B, A}, power(B, n + 2), {A, B}}), "permutation for n=" + std::to_string(n));
    const auto r = rotation(permuted);
    t.check(r.end == Vec2{-1, 0}, "end vector for n=" + std::to_string(n) + " is " + vec(r.end));
    t.check(r.at_least(2), "at_least(pi) for n=" + std::to_string(n));
    t.check(!r.exceeds(2), "strict residual for n=" + std::to_string(n));
  }
  return t.result("D=(n,0), n=-2..10: permuted word turns (1,0) to (-1,0) by exactly pi");
}

Result group_relations() {
  Tally t;
  t.check(phi({B, A, B}) == phi({A, B, A}), "braid relation");
  Word ab6;
  for (int k = 0; k < 6; ++k) ab6.insert(ab6.end(), {Letter::A, Letter::B});
  t.check(phi(ab6) == SL2Matrix::identity(), "(ab)^6");
  t.check(phi({B, B, A, B, B, A}) == -SL2Matrix::identity(), "b^-2 a^-1 b^-2 a^-1");
  const auto o = oracle::product({B, B, A, B, B, A});
  t.check(o == oracle::Int2x2{-1, 0, 0, -1}, "oracle product");
  return t.result("braid relation, (ab)^6 = I, b^-2 a^-1 b^-2 a^-1 = -I");
}

Result gs_cross_validation() {
  Tally t;
  long count = 0;
  for (std::size_t l = 2; l <= 5; ++l) {
    oracle::for_each_sequence(l, -3, 3, [&](const std::vector<std::int64_t>& s) {
      const auto g = make_cycle(s);
      if (!oracle::nonnegative(oracle::dot_products(g))) return;
      ++count;
      const auto lp = check_gs(g, GSMode::Concave);
      t.check(lp.has_value(), "check_gs failed on " + seq_text(s));
      ConstructiveWitness c;
      try {
        c = nonnegative_witness(g);
      } catch (const Error& e) {
        t.check(false, std::string(e.what()) + " on " + seq_text(s));
        return;
      }
      for (const GSWitness* w : std::vector<const GSWitness*>{lp ? &*lp : nullptr, &c.witness}) {
        if (!w) continue;
        bool strict = true;
        for (std::size_t i = 0; i < s.size(); ++i) strict = strict && w->z[i] > 0 && w->a[i] > 0;
        t.check(strict && oracle::q_times(g, w->z) == w->a, "witness on " + seq_text(s));
      }
    });
  }
  return t.result(std::to_string(count) + " non-negative cycles of length 2..5, s in [-3,3]");
}

Result augmented_conservation() {
  Tally t;
  std::mt19937_64 rng(2024);
  int moves = 0, toric = 0;
  while (moves < 1000) {
    // Fresh start: a random non-negative cycle with its LP witness.
    std::vector<std::int64_t> s(std::uniform_int_distribution<std::size_t>(2, 5)(rng));
    for (auto& x : s) x = std::uniform_int_distribution<int>(-1, 3)(rng);
    const auto g0 = make_cycle(s);
    if (!is_nonnegative(sign_class(g0))) continue;
    const auto w0 = check_gs(g0, GSMode::Concave);
    if (!w0) continue;
    AugmentedGraph ag(g0, w0->a, w0->z);
    for (int step = 0; step < 10 && moves < 1000; ++step) {
      const auto& g = ag.graph();
      const auto& a = ag.area();
      const auto& z = *ag.witness();
      const bool do_toric = std::uniform_int_distribution<int>(0, 1)(rng) == 1;
      Rational bound;
      std::size_t site;
      if (do_toric) {
        site = std::uniform_int_distribution<std::size_t>(0, g.edge_count() - 1)(rng);
        const auto [i, j] = g.edges()[site];
        bound = std::min<Rational>({a[i], a[j], z[i] + z[j]});
      } else {
        site = std::uniform_int_distribution<std::size_t>(0, g.vertex_count() - 1)(rng);
        bound = a[site];
      }
      if (bound <= 0) break;
      // Admissible weight strictly inside (0, bound).
      const auto num = std::uniform_int_distribution<int>(1, 15)(rng);
      const Rational w = bound * Rational(num, 16);
      ag = do_toric ? augmented_toric_blowup(ag, site, w) : augmented_interior_blowup(ag, site, w);
      ++moves;
      toric += do_toric;
      t.check(oracle::q_times(ag.graph(), *ag.witness()) == ag.area(), "Qz != a after move " + std::to_string(moves));
      for (const auto& x : ag.area()) t.check(x > 0, "non-positive area after move " + std::to_string(moves));
    }
  }
  return t.result(std::to_string(moves) + " augmented blow-ups (" + std::to_string(toric) + " toric)");
}

Result inertia_stability() {
  Tally t;
  std::mt19937_64 rng(6);
  int graphs = 0;
  while (graphs < 500) {
    const auto g = oracle::random_graph(rng, 6, -4, 4);
    if (g.edge_count() == 0) continue;
    ++graphs;
    const auto e = std::uniform_int_distribution<std::size_t>(0, g.edge_count() - 1)(rng);
    const auto before = inertia(intersection_matrix(g));
    const auto h = toric_blowup(g, e);
    const auto after = inertia(intersection_matrix(h));
    const auto numeric = oracle::eigen_signature(oracle::dense(h));
    t.check(after.b_plus == before.b_plus && after.b_minus == before.b_minus + 1, "graph " + std::to_string(graphs));
    t.check(after.b_plus == numeric.plus && after.b_minus == numeric.minus, "eigenvalue oracle, graph " + std::to_string(graphs));
  }
  return t.result("500 random graphs with up to 6 vertices");
}

Result nonnegativity_monotonicity() {
  Tally t;
  long cycles = 0, downs = 0;
  for (std::size_t l = 2; l <= 7; ++l) {
    oracle::for_each_sequence(l, -2, 2, [&](const std::vector<std::int64_t>& s) {
      const auto g = make_cycle(s);
      if (!oracle::nonnegative(oracle::dot_products(g))) return;
      ++cycles;
      for (std::size_t v = 0; v < g.vertex_count(); ++v) {
        DecoratedGraph h = g;
        try {
          h = toric_blowdown(g, v);
        } catch (const Error&) {
          continue;
        }
        ++downs;
        t.check(oracle::nonnegative(oracle::dot_products(h)), "blow-down of vertex " + std::to_string(v + 1) + " in " + seq_text(s));
      }
    });
  }
  return t.result(std::to_string(cycles) + " non-negative cycles, " + std::to_string(downs) + " blow-downs");
}

Result open_book_bookkeeping() {
  Tally t;
  const auto tri = DecoratedGraph::from_raw({{{"v1", 1, 1}, {"v2", 0, -2}, {"v3", 2, 2}}, {{"v1", "v2"}, {"v2", "v3"}, {"v3", "v1"}}});
  const auto ob = build_open_book(tri, Side::Concave);
  t.check(ob.page_genus == 4 && ob.binding_count == 7 && ob.monodromy.size() == 10, "triangle counts");

  std::mt19937_64 rng(8);
  int graphs = 0;
  while (graphs < 500) {
    const auto g = oracle::random_graph(rng, 6, -3, 3, 2, 3);
    if (!is_nonnegative(sign_class(g))) continue;
    ++graphs;
    const auto b = build_open_book(g, Side::Concave);
    std::int64_t sum_s = 0, sum_g = 0, chi_pieces = 0;
    const auto d = oracle::dot_products(g);
    for (std::size_t i = 0; i < g.vertex_count(); ++i) {
      sum_s += g.vertex(i).self_intersection;
      sum_g += g.vertex(i).genus;
      chi_pieces += 2 - 2 * g.vertex(i).genus - d[i];
    }
    const auto l = static_cast<std::int64_t>(g.edge_count());
    const auto q = b.binding_count;
    t.check(q == sum_s + 2 * l, "q = sum s + 2l, graph " + std::to_string(graphs));
    t.check(b.page_genus == sum_g + l - static_cast<std::int64_t>(g.vertex_count()) + 1, "genus, graph " + std::to_string(graphs));
    t.check(2 - 2 * b.page_genus - q == chi_pieces - 2 * l, "Euler, graph " + std::to_string(graphs));
    t.check(static_cast<std::int64_t>(b.monodromy.size()) == l + q, "length, graph " + std::to_string(graphs));
  }
  return t.result("triangle (4, 7, 10) and 500 random non-negative graphs");
}

Result word_blowup_compatibility() {
  Tally t;
  std::mt19937_64 rng(9);
  int cycles = 0;
  while (cycles < 200) {
    std::vector<std::int64_t> s(std::uniform_int_distribution<std::size_t>(2, 6)(rng));
    for (auto& x : s) x = std::uniform_int_distribution<int>(-1, 4)(rng);
    const auto g = make_cycle(s);
    if (!is_nonnegative(sign_class(g))) continue;
    ++cycles;
    // Edge e_k joins v_k and v_{k+1}; stay away from the wrap-around edge.
    const auto e = std::uniform_int_distribution<std::size_t>(0, s.size() - 2)(rng);
    const auto blown = circular_sequence(toric_blowup(g, e));
    if (!blown) {
      t.check(false, "blow-up of " + seq_text(s) + " is not circular");
      continue;
    }
    const auto w = word_of_divisor(s);
    const auto w2 = word_of_divisor(*blown);
    int matches = 0;
    for (std::size_t p = 0; p + 3 <= w.size(); ++p) {
      try {
        if (rewrite(w, Braid{p}) == w2) ++matches;
      } catch (const Error&) {
      }
    }
    t.check(matches == 1, seq_text(s) + " -> " + seq_text(*blown) + ": " + std::to_string(matches) + " braid sites");
    t.check(phi(w).trace() == phi(w2).trace(), "trace for " + seq_text(s));
  }
  return t.result("200 random non-negative cycles, blow-up at a non-wrap edge");
}

Result minimal_cycle_sweep() {
  Tally t;
  long cycles = 0, tight = 0, parabolic = 0;
  for (std::size_t l = 2; l <= 6; ++l) {
    oracle::for_each_sequence(l, -2, 4, [&](const std::vector<std::int64_t>& s) {
      bool minimal = true, some_nonneg = false;
      for (auto x : s) {
        minimal = minimal && x != -1;
        some_nonneg = some_nonneg || x >= 0;
      }
      if (!minimal || !some_nonneg) return;
      const auto g = make_cycle(s);
      if (!is_nonnegative(sign_class(g))) return;
      ++cycles;
      const auto v = classify_tightness(s);
      const bool rotation_ok = v.evidence.rotation && v.evidence.rotation->at_least(2);
      t.check(rotation_ok, "max rotation below pi for " + seq_text(s));
      if (v.outcome == TightnessOutcome::UniversallyTight) {
        ++tight;
      } else if (v.outcome == TightnessOutcome::Undetermined && v.reason == TightnessReason::ParabolicException) {
        ++parabolic;
      } else {
        t.check(false, std::string(to_string(v.reason)) + " for " + seq_text(s));
      }
    });
  }
  return t.result(std::to_string(cycles) + " toric-minimal non-negative cycles: " + std::to_string(tight) + " tight, " +
                  std::to_string(parabolic) + " parabolic exceptions");
}

Result exact_vs_float() {
  Tally t;
  std::mt19937_64 rng(11);
  long compared = 0, boundary = 0;
  for (int trial = 0; trial < 10000; ++trial) {
    const auto w = oracle::random_word(rng, 30);
    const auto r = rotation(w);
    const double angle = oracle::angle_sum(w);
    for (std::int64_t m = -8; m <= 8; ++m) {
      const double gap = angle - static_cast<double>(m) * std::numbers::pi / 2;
      if (std::abs(gap) <= 1e-9) {
        // Boundary case: the exact predicate must settle it, and identically on a rerun.
        ++boundary;
        t.check(rotation(w).at_least(m) == r.at_least(m) && r.compare_quarter_turns(m) == 0,
                "boundary case not exact for " + format_word(w));
        continue;
      }
      ++compared;
      t.check(r.at_least(m) == (gap > 0), "m=" + std::to_string(m) + " for " + format_word(w));
    }
  }
  return t.result("10^4 random words of length <= 30: " + std::to_string(compared) + " comparisons, " +
                  std::to_string(boundary) + " boundary-exact");
}

Result example_reproduction() {
  Tally t;
  const auto d1 = DecoratedGraph::from_raw({{{"C1", 0, 1}}, {}});
  const auto d2 = DecoratedGraph::from_raw({{{"C1", 0, 1}, {"C2", 0, 2}}, {{"C1", "C2"}}});
  t.check(check_gs(d1, GSMode::Concave).has_value(), "D1 concave");
  t.check(check_gs(d2, GSMode::Concave).has_value(), "D2 concave");
  t.check(inertia(intersection_matrix(d1)).b_plus == 1, "b+(D1) = 1");
  t.check(inertia(intersection_matrix(d2)).b_plus == 2, "b+(D2) = 2");
  t.check(oracle::eigen_signature(oracle::dense(d2)).plus == 2, "eigenvalue oracle for D2");
  return t.result("D1 = (1), D2 = (1)-(2): concave, b+ = 1 and 2");
}

struct Criterion {
  int id;
  const char* name;
  double budget_seconds;
  std::function<Result()> run;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "matrix oracle", 1, matrix_oracle},
      {2, "parabolic family", 1, parabolic_family},
      {3, "group relations", 1, group_relations},
      {4, "GS cross-validation", 30, gs_cross_validation},
      {5, "augmented-move conservation", 10, augmented_conservation},
      {6, "inertia stability", 30, inertia_stability},
      {7, "non-negativity monotonicity", 30, nonnegativity_monotonicity},
      {8, "open-book bookkeeping", 10, open_book_bookkeeping},
      {9, "word/blow-up compatibility", 10, word_blowup_compatibility},
      {10, "minimal-cycle sweep", 120, minimal_cycle_sweep},
      {11, "exact-vs-float rotation", 30, exact_vs_float},
      {12, "two-divisor example", 1, example_reproduction},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Result r;
    try {
      r = c.run();
    } catch (const std::exception& e) {
      r = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool in_time = secs < c.budget_seconds;
    const bool pass = r.ok && in_time;
    failed += !pass;
    std::printf("[%s] %2d %-28s %8.3fs / %6.0fs  %s%s\n", pass ? "PASS" : "FAIL", c.id, c.name, secs, c.budget_seconds,
                r.detail.c_str(), in_time ? "" : " (over time budget)");
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
