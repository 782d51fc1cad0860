#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "plumb/graph.hpp"

namespace plumb {

enum class Letter : std::uint8_t { A, AInv, B, BInv };

using Word = std::vector<Letter>;

Letter inverse(Letter x) noexcept;

/// Space-separated powers, e.g. "b^-3 a^-1 b^-2 a^-1"; the empty word is "1".
std::string format_word(const Word& w);
/// Accepts what format_word produces plus bare letters ("a", "b") and any
/// nonzero exponent. Throws Error{MalformedWord}.
Word parse_word(std::string_view text);

struct Vec2 {
  std::int64_t x = 0;
  std::int64_t y = 0;

  friend bool operator==(const Vec2&, const Vec2&) = default;
};

/// 2x2 integer matrix of determinant 1. Arithmetic is overflow-checked
/// (Error{Overflow}).
class SL2Matrix {
 public:
  SL2Matrix() = default;
  /// Throws Error{NotUnimodular}.
  SL2Matrix(std::int64_t m11, std::int64_t m12, std::int64_t m21, std::int64_t m22);

  static SL2Matrix identity() { return {}; }
  static SL2Matrix of(Letter x);

  std::int64_t m11() const noexcept { return m_[0]; }
  std::int64_t m12() const noexcept { return m_[1]; }
  std::int64_t m21() const noexcept { return m_[2]; }
  std::int64_t m22() const noexcept { return m_[3]; }
  std::int64_t trace() const;

  SL2Matrix inverse() const;
  SL2Matrix operator-() const;
  SL2Matrix operator*(const SL2Matrix& o) const;
  Vec2 operator*(const Vec2& v) const;

  /// "[[p,q],[r,s]]"
  std::string to_string() const;

  friend bool operator==(const SL2Matrix&, const SL2Matrix&) = default;

 private:
  std::array<std::int64_t, 4> m_{1, 0, 0, 1};
};

/// Phi(a) = [[1,1],[0,1]], Phi(b) = [[1,0],[-1,1]], product left to right.
SL2Matrix phi(const Word& w);

/// w(D) = b^{-2-s_1} a^{-1} ... b^{-2-s_l} a^{-1}.
/// Throws Error{TooShort} for l < 2, Error{ExponentNegative} if some s_i < -2.
Word word_of_divisor(const std::vector<std::int64_t>& cycle);

struct CancelPair {
  std::size_t position = 0;
};
/// Moves the first k letters to the end (k may be negative).
struct CyclicPermute {
  std::ptrdiff_t k = 0;
};
/// b^-1 a^-1 b^-1 <-> a^-1 b^-1 a^-1 starting at position.
struct Braid {
  std::size_t position = 0;
};
using RewriteStep = std::variant<CancelPair, CyclicPermute, Braid>;

/// Throws Error{NotApplicable} when the step does not match at its site.
Word rewrite(const Word& w, const RewriteStep& step);

/// Total angle swept by the vector path of a word, kept exactly as the signed
/// number K of quarter-axis crossings (quadrants are half-open, counter-
/// clockwise: [q pi/2, (q+1) pi/2)) plus the start and end vectors:
///   c_w = K pi/2 + r(end) - r(start),  r = angle within the quadrant.
struct RotationValue {
  std::int64_t quarter_crossings = 0;
  Vec2 start{1, 0};
  Vec2 end{1, 0};
  /// Display only.
  double float_value = 0.0;

  /// Sign of c_w - m pi/2, decided from integers only.
  std::strong_ordering compare_quarter_turns(std::int64_t m) const;
  bool at_least(std::int64_t m) const { return compare_quarter_turns(m) >= 0; }
  bool exceeds(std::int64_t m) const { return compare_quarter_turns(m) > 0; }

  /// Exact order of two rotation values with equal start vectors.
  std::strong_ordering compare(const RotationValue& o) const;
};

/// Quadrant index 0..3 of a nonzero vector under the half-open convention.
int quadrant(const Vec2& v);

/// Applies the letters of w from last to first to (1, 0)^T and accumulates
/// the angle of each step. Every step turns by less than pi/2 (the dot product
/// of v and Phi(x) v is a positive definite form), so it crosses at most one axis.
RotationValue rotation(const Word& w);

/// n with n pi <= c_w < (n + 1) pi.
std::int64_t twisting_floor(const RotationValue& r);

enum class BundleKind { Identity, MinusIdentity, Elliptic, Parabolic, Hyperbolic };

struct BundleType {
  BundleKind kind = BundleKind::Identity;
  /// Parabolic only: +1 for trace 2, -1 for trace -2.
  int trace_sign = 1;
  /// Parabolic only: the conjugacy invariant n of trace_sign * A ~ [[1,n],[0,1]].
  std::int64_t invariant = 0;

  friend bool operator==(const BundleType&, const BundleType&) = default;
};

/// "Hyperbolic", "Parabolic(5)", "-Parabolic(2)" (trace -2), ...
std::string to_string(const BundleType& t);

/// Trichotomy by |trace|. For |trace| = 2 the invariant comes from a primitive
/// fixed vector v of +-A completed to a basis (v, u) of determinant 1:
/// +-A u = u + n v. Throws Error{NotUnimodular}.
BundleType bundle_type(const SL2Matrix& a);
/// Same, for raw entries (checks the determinant).
BundleType bundle_type(std::int64_t m11, std::int64_t m12, std::int64_t m21, std::int64_t m22);

/// All letter-level cyclic rotations of w; the one whose rotation is largest
/// (earliest on ties), with that rotation.
struct BestPermutation {
  Word word;
  std::size_t shift = 0;
  RotationValue rotation;
};
BestPermutation best_cyclic_rotation(const Word& w);

enum class TightnessOutcome { UniversallyTight, Undetermined, NotApplicable };

enum class TightnessReason {
  /// (-1,-1) and (-1,-2): Golla-Lisca, Proposition 4.1.
  Citation,
  /// c_w >= pi and the monodromy is not the excluded parabolic class (Honda).
  TwistingAtLeastPi,
  /// Positive parabolic monodromy [[1,n],[0,1]], n > 0.
  ParabolicException,
  /// Every cyclic rotation of the word gives c_w < pi.
  TwistingBelowPi,
  /// No non-negative divisor reachable by blow-downs.
  NoNonnegativeRepresentative,
};

std::string_view to_string(TightnessOutcome o) noexcept;
std::string_view to_string(TightnessReason r) noexcept;

struct TightnessEvidence {
  std::vector<std::int64_t> input;
  /// First non-negative divisor found by blow-downs.
  std::vector<std::int64_t> representative;
  /// representative after blow-downs until none applies.
  std::vector<std::int64_t> reduced;
  Word word;
  Word best_word;
  std::optional<RotationValue> rotation;
  std::optional<bool> twisting_at_least_pi;
  std::optional<SL2Matrix> monodromy;
  std::optional<BundleType> bundle;
  std::optional<BundleType> inverse_bundle;
  std::optional<BundleType> negated_bundle;
  std::string citation;
  std::vector<std::string> notes;
};

struct TightnessVerdict {
  TightnessOutcome outcome = TightnessOutcome::Undetermined;
  TightnessReason reason = TightnessReason::TwistingBelowPi;
  TightnessEvidence evidence;
};

/// Throws Error{NotCircular} unless g is a cycle of spheres.
TightnessVerdict classify_tightness(const DecoratedGraph& g);
/// Cyclic sequence of self-intersections. Throws Error{TooShort} for l < 2.
TightnessVerdict classify_tightness(const std::vector<std::int64_t>& cycle);

}  // namespace plumb
