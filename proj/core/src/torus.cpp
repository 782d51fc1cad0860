#include "plumb/torus.hpp"

#include <charconv>
#include <cmath>
#include <numbers>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "plumb/error.hpp"
#include "plumb/moves.hpp"

namespace plumb {

namespace {

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw Error(ErrorCode::Overflow, "integer overflow in SL(2,Z) arithmetic");
  return r;
}

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw Error(ErrorCode::Overflow, "integer overflow in SL(2,Z) arithmetic");
  return r;
}

std::int64_t checked_sub(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_sub_overflow(a, b, &r)) throw Error(ErrorCode::Overflow, "integer overflow in SL(2,Z) arithmetic");
  return r;
}

__extension__ typedef __int128 Wide;

Wide cross(const Vec2& a, const Vec2& b) { return Wide(a.x) * b.y - Wide(a.y) * b.x; }

}  // namespace

Letter inverse(Letter x) noexcept {
  switch (x) {
    case Letter::A: return Letter::AInv;
    case Letter::AInv: return Letter::A;
    case Letter::B: return Letter::BInv;
    case Letter::BInv: return Letter::B;
  }
  return x;
}

std::string format_word(const Word& w) {
  if (w.empty()) return "1";
  std::ostringstream out;
  std::size_t i = 0;
  while (i < w.size()) {
    std::size_t j = i;
    while (j < w.size() && w[j] == w[i]) ++j;
    const auto run = static_cast<std::int64_t>(j - i);
    const bool is_a = w[i] == Letter::A || w[i] == Letter::AInv;
    const bool negative = w[i] == Letter::AInv || w[i] == Letter::BInv;
    if (i > 0) out << ' ';
    out << (is_a ? 'a' : 'b');
    if (negative || run != 1) out << '^' << (negative ? -run : run);
    i = j;
  }
  return out.str();
}

Word parse_word(std::string_view text) {
  Word w;
  std::istringstream in{std::string(text)};
  std::string token;
  bool saw_identity = false;
  while (in >> token) {
    if (token == "1") {
      saw_identity = true;
      continue;
    }
    if (token[0] != 'a' && token[0] != 'b') throw Error(ErrorCode::MalformedWord, "bad token '" + token + "'");
    std::int64_t exponent = 1;
    if (token.size() > 1) {
      if (token[1] != '^' || token.size() == 2) throw Error(ErrorCode::MalformedWord, "bad token '" + token + "'");
      const char* first = token.data() + 2;
      const char* last = token.data() + token.size();
      auto [ptr, ec] = std::from_chars(first, last, exponent);
      if (ec != std::errc() || ptr != last || exponent == 0)
        throw Error(ErrorCode::MalformedWord, "bad exponent in '" + token + "'");
    }
    const bool is_a = token[0] == 'a';
    const Letter x = exponent > 0 ? (is_a ? Letter::A : Letter::B) : (is_a ? Letter::AInv : Letter::BInv);
    w.insert(w.end(), static_cast<std::size_t>(exponent > 0 ? exponent : -exponent), x);
  }
  if (saw_identity && !w.empty()) throw Error(ErrorCode::MalformedWord, "'1' only denotes the empty word");
  return w;
}

SL2Matrix::SL2Matrix(std::int64_t m11, std::int64_t m12, std::int64_t m21, std::int64_t m22)
    : m_{m11, m12, m21, m22} {
  if (checked_sub(checked_mul(m11, m22), checked_mul(m12, m21)) != 1)
    throw Error(ErrorCode::NotUnimodular, "determinant is not 1: " + to_string());
}

SL2Matrix SL2Matrix::of(Letter x) {
  switch (x) {
    case Letter::A: return {1, 1, 0, 1};
    case Letter::AInv: return {1, -1, 0, 1};
    case Letter::B: return {1, 0, -1, 1};
    case Letter::BInv: return {1, 0, 1, 1};
  }
  return {};
}

std::int64_t SL2Matrix::trace() const { return checked_add(m_[0], m_[3]); }

SL2Matrix SL2Matrix::inverse() const { return {m_[3], -m_[1], -m_[2], m_[0]}; }

SL2Matrix SL2Matrix::operator-() const { return {-m_[0], -m_[1], -m_[2], -m_[3]}; }

SL2Matrix SL2Matrix::operator*(const SL2Matrix& o) const {
  auto dot = [](std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d) {
    return checked_add(checked_mul(a, b), checked_mul(c, d));
  };
  SL2Matrix r;
  r.m_ = {dot(m_[0], o.m_[0], m_[1], o.m_[2]), dot(m_[0], o.m_[1], m_[1], o.m_[3]),
          dot(m_[2], o.m_[0], m_[3], o.m_[2]), dot(m_[2], o.m_[1], m_[3], o.m_[3])};
  return r;
}

Vec2 SL2Matrix::operator*(const Vec2& v) const {
  return {checked_add(checked_mul(m_[0], v.x), checked_mul(m_[1], v.y)),
          checked_add(checked_mul(m_[2], v.x), checked_mul(m_[3], v.y))};
}

std::string SL2Matrix::to_string() const {
  std::ostringstream out;
  out << "[[" << m_[0] << ',' << m_[1] << "],[" << m_[2] << ',' << m_[3] << "]]";
  return out.str();
}

SL2Matrix phi(const Word& w) {
  SL2Matrix m;
  for (auto x : w) m = m * SL2Matrix::of(x);
  return m;
}

Word word_of_divisor(const std::vector<std::int64_t>& cycle) {
  if (cycle.size() < 2) throw Error(ErrorCode::TooShort, "a circular divisor has at least two spheres");
  Word w;
  for (auto s : cycle) {
    if (s < -2) throw Error(ErrorCode::ExponentNegative, "self-intersection " + std::to_string(s) + " < -2");
    w.insert(w.end(), static_cast<std::size_t>(s + 2), Letter::BInv);
    w.push_back(Letter::AInv);
  }
  return w;
}

Word rewrite(const Word& w, const RewriteStep& step) {
  if (const auto* c = std::get_if<CancelPair>(&step)) {
    const auto p = c->position;
    if (p + 1 >= w.size() || w[p + 1] != inverse(w[p]))
      throw Error(ErrorCode::NotApplicable, "no cancelling pair at " + std::to_string(p));
    Word out(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(p));
    out.insert(out.end(), w.begin() + static_cast<std::ptrdiff_t>(p) + 2, w.end());
    return out;
  }
  if (const auto* c = std::get_if<CyclicPermute>(&step)) {
    if (w.empty()) return w;
    const auto n = static_cast<std::ptrdiff_t>(w.size());
    const auto k = ((c->k % n) + n) % n;
    Word out(w.begin() + k, w.end());
    out.insert(out.end(), w.begin(), w.begin() + k);
    return out;
  }
  const auto p = std::get<Braid>(step).position;
  if (p + 3 > w.size()) throw Error(ErrorCode::NotApplicable, "no braid site at " + std::to_string(p));
  const Word bab{Letter::BInv, Letter::AInv, Letter::BInv};
  const Word aba{Letter::AInv, Letter::BInv, Letter::AInv};
  const Word site(w.begin() + static_cast<std::ptrdiff_t>(p), w.begin() + static_cast<std::ptrdiff_t>(p) + 3);
  Word out = w;
  if (site == bab) {
    std::copy(aba.begin(), aba.end(), out.begin() + static_cast<std::ptrdiff_t>(p));
  } else if (site == aba) {
    std::copy(bab.begin(), bab.end(), out.begin() + static_cast<std::ptrdiff_t>(p));
  } else {
    throw Error(ErrorCode::NotApplicable, "no braid site at " + std::to_string(p));
  }
  return out;
}

int quadrant(const Vec2& v) {
  if (v.x > 0 && v.y >= 0) return 0;
  if (v.x <= 0 && v.y > 0) return 1;
  if (v.x < 0 && v.y <= 0) return 2;
  if (v.x >= 0 && v.y < 0) return 3;
  throw std::invalid_argument("zero vector has no quadrant");
}

namespace {

// Turns v clockwise by whole quarter turns into quadrant 0.
Vec2 to_first_quadrant(Vec2 v) {
  for (int q = quadrant(v); q > 0; --q) v = {v.y, -v.x};
  return v;
}

double residual_angle(const Vec2& v) {
  const auto r = to_first_quadrant(v);
  return std::atan2(static_cast<double>(r.y), static_cast<double>(r.x));
}

std::strong_ordering sign_of(Wide x) {
  if (x > 0) return std::strong_ordering::greater;
  if (x < 0) return std::strong_ordering::less;
  return std::strong_ordering::equal;
}

}  // namespace

std::strong_ordering RotationValue::compare_quarter_turns(std::int64_t m) const {
  if (quarter_crossings != m) return quarter_crossings <=> m;
  // Same crossing count: compare the residual of end against that of start.
  return sign_of(cross(to_first_quadrant(start), to_first_quadrant(end)));
}

std::strong_ordering RotationValue::compare(const RotationValue& o) const {
  if (!(start == o.start)) throw std::invalid_argument("rotation values with different start vectors");
  if (quarter_crossings != o.quarter_crossings) return quarter_crossings <=> o.quarter_crossings;
  return sign_of(cross(to_first_quadrant(o.end), to_first_quadrant(end)));
}

RotationValue rotation(const Word& w) {
  RotationValue r;
  Vec2 v = r.start;
  for (auto it = w.rbegin(); it != w.rend(); ++it) {
    const Vec2 next = SL2Matrix::of(*it) * v;
    switch ((quadrant(next) - quadrant(v) + 4) % 4) {
      case 0: break;
      case 1: ++r.quarter_crossings; break;
      case 3: --r.quarter_crossings; break;
      default: throw std::logic_error("a single letter turned a vector by more than a quarter");
    }
    v = next;
  }
  r.end = v;
  r.float_value = static_cast<double>(r.quarter_crossings) * std::numbers::pi / 2 + residual_angle(r.end) -
                  residual_angle(r.start);
  return r;
}

std::int64_t twisting_floor(const RotationValue& r) {
  // c_w lies strictly between (K - 1) pi/2 and (K + 1) pi/2.
  const auto k = r.quarter_crossings + 1;
  std::int64_t n = k >= 0 ? k / 2 : -((-k + 1) / 2);
  while (!r.at_least(2 * n)) --n;
  return n;
}

namespace {

// Returns (g, x, y) with a x + b y = g = gcd(a, b) >= 0.
std::array<std::int64_t, 3> extended_gcd(std::int64_t a, std::int64_t b) {
  std::int64_t old_r = a, r = b, old_s = 1, s = 0, old_t = 0, t = 1;
  while (r != 0) {
    const auto q = old_r / r;
    old_r = std::exchange(r, old_r - q * r);
    old_s = std::exchange(s, old_s - q * s);
    old_t = std::exchange(t, old_t - q * t);
  }
  if (old_r < 0) return {-old_r, -old_s, -old_t};
  return {old_r, old_s, old_t};
}

// n with B ~ [[1, n], [0, 1]] for trace-2 B != I.
std::int64_t parabolic_invariant(const SL2Matrix& b) {
  std::int64_t p = b.m11() - 1, q = b.m12();
  if (p == 0 && q == 0) {
    p = b.m21();
    q = b.m22() - 1;
  }
  // (B - I) has rank one; v spans its kernel.
  const auto g = std::gcd(p, q);
  const Vec2 v{-q / g, p / g};
  const auto [one, alpha, beta] = extended_gcd(v.x, -v.y);
  const Vec2 u{beta, alpha};
  const Vec2 bu = b * u;
  const Vec2 shift{bu.x - u.x, bu.y - u.y};
  const auto n = v.x != 0 ? shift.x / v.x : shift.y / v.y;
  if (!(b * v == v) || shift.x != n * v.x || shift.y != n * v.y)
    throw std::logic_error("parabolic normal form failed for " + b.to_string());
  return n;
}

}  // namespace

std::string to_string(const BundleType& t) {
  switch (t.kind) {
    case BundleKind::Identity: return "Identity";
    case BundleKind::MinusIdentity: return "MinusIdentity";
    case BundleKind::Elliptic: return "Elliptic";
    case BundleKind::Hyperbolic: return "Hyperbolic";
    case BundleKind::Parabolic:
      return std::string(t.trace_sign < 0 ? "-" : "") + "Parabolic(" + std::to_string(t.invariant) + ")";
  }
  return "Identity";
}

BundleType bundle_type(const SL2Matrix& a) {
  if (a == SL2Matrix::identity()) return {BundleKind::Identity, 1, 0};
  if (a == -SL2Matrix::identity()) return {BundleKind::MinusIdentity, 1, 0};
  const auto t = a.trace();
  if (t > 2 || t < -2) return {BundleKind::Hyperbolic, 1, 0};
  if (t > -2 && t < 2) return {BundleKind::Elliptic, 1, 0};
  const int sign = t > 0 ? 1 : -1;
  return {BundleKind::Parabolic, sign, parabolic_invariant(sign > 0 ? a : -a)};
}

BundleType bundle_type(std::int64_t m11, std::int64_t m12, std::int64_t m21, std::int64_t m22) {
  return bundle_type(SL2Matrix(m11, m12, m21, m22));
}

BestPermutation best_cyclic_rotation(const Word& w) {
  BestPermutation best{w, 0, rotation(w)};
  for (std::size_t k = 1; k < w.size(); ++k) {
    auto candidate = rewrite(w, CyclicPermute{static_cast<std::ptrdiff_t>(k)});
    auto r = rotation(candidate);
    if (r.compare(best.rotation) > 0) best = {std::move(candidate), k, r};
  }
  return best;
}

std::string_view to_string(TightnessOutcome o) noexcept {
  switch (o) {
    case TightnessOutcome::UniversallyTight: return "UniversallyTight";
    case TightnessOutcome::Undetermined: return "Undetermined";
    case TightnessOutcome::NotApplicable: return "NotApplicable";
  }
  return "Undetermined";
}

std::string_view to_string(TightnessReason r) noexcept {
  switch (r) {
    case TightnessReason::Citation: return "Citation";
    case TightnessReason::TwistingAtLeastPi: return "TwistingAtLeastPi";
    case TightnessReason::ParabolicException: return "ParabolicException";
    case TightnessReason::TwistingBelowPi: return "TwistingBelowPi";
    case TightnessReason::NoNonnegativeRepresentative: return "NoNonnegativeRepresentative";
  }
  return "TwistingBelowPi";
}

TightnessVerdict classify_tightness(const DecoratedGraph& g) {
  auto seq = circular_sequence(g);
  if (!seq) throw Error(ErrorCode::NotCircular, "divisor is not a cycle of spheres");
  return classify_tightness(*seq);
}

TightnessVerdict classify_tightness(const std::vector<std::int64_t>& cycle) {
  TightnessVerdict verdict;
  auto& ev = verdict.evidence;
  ev.input = cycle;
  ev.notes.push_back("the concave boundary is -Y_D; the monodromy is tested as computed, A = Phi(w(D))");

  const auto rep = nonnegative_representative(make_cycle(cycle));
  if (!rep) {
    verdict.outcome = TightnessOutcome::NotApplicable;
    verdict.reason = TightnessReason::NoNonnegativeRepresentative;
    ev.notes.push_back("only blow-downs were searched");
    return verdict;
  }
  ev.representative = *circular_sequence(rep->graph);

  auto reduced = rep->graph;
  for (auto moves = applicable_blowdowns(reduced); !moves.empty(); moves = applicable_blowdowns(reduced)) {
    reduced = apply_move(reduced, moves.front());
    if (!is_nonnegative(sign_class(reduced)))
      throw Error(ErrorCode::InternalStall, "toric blow-down broke non-negativity");
  }
  ev.reduced = *circular_sequence(reduced);

  const auto& d = ev.reduced;
  if (d.size() == 2 && ((d[0] == -1 && (d[1] == -1 || d[1] == -2)) || (d[1] == -1 && d[0] == -2))) {
    verdict.outcome = TightnessOutcome::UniversallyTight;
    verdict.reason = TightnessReason::Citation;
    ev.citation = "follows from Proposition 4.1 of [GoLi14]";
    return verdict;
  }

  ev.word = word_of_divisor(d);
  const auto a = phi(ev.word);
  ev.monodromy = a;
  ev.bundle = bundle_type(a);
  ev.inverse_bundle = bundle_type(a.inverse());
  ev.negated_bundle = bundle_type(-a);

  const auto best = best_cyclic_rotation(ev.word);
  ev.best_word = best.word;
  ev.rotation = best.rotation;
  ev.twisting_at_least_pi = best.rotation.at_least(2);

  if (ev.bundle->kind == BundleKind::Parabolic && ev.bundle->trace_sign > 0 && ev.bundle->invariant > 0) {
    verdict.outcome = TightnessOutcome::Undetermined;
    verdict.reason = TightnessReason::ParabolicException;
    if (ev.bundle->invariant == 1)
      ev.notes.push_back("n = 1: inside the excluded range n > 0, outside Honda's virtually overtwisted range n > 1");
    return verdict;
  }
  if (*ev.twisting_at_least_pi) {
    verdict.outcome = TightnessOutcome::UniversallyTight;
    verdict.reason = TightnessReason::TwistingAtLeastPi;
    ev.citation = "distinguished by the S^1-twisting [Honda]";
  } else {
    verdict.outcome = TightnessOutcome::Undetermined;
    verdict.reason = TightnessReason::TwistingBelowPi;
  }
  return verdict;
}

}  // namespace plumb
