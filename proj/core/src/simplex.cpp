#include "plumb/simplex.hpp"

#include <cassert>
#include <stdexcept>

namespace plumb {

namespace {

// Dense tableau. Columns: y (n), surplus s (m), artificial t (one per row that
// needs one), then the right-hand side. Row r reads
//   sum_j A_rj y_j - s_r (+ t_r) = b_r        if b_r > 0
//  -sum_j A_rj y_j + s_r        = -b_r       otherwise (s_r starts basic).
class Tableau {
 public:
  Tableau(const RationalMatrix& a, const RationalVector& b) : m_(a.size()), n_(a.empty() ? 0 : a[0].size()) {
    artificial_of_row_.assign(m_, npos);
    std::size_t artificials = 0;
    for (std::size_t r = 0; r < m_; ++r) {
      if (b[r] > 0) artificial_of_row_[r] = artificials++;
    }
    cols_ = n_ + m_ + artificials;
    rows_.assign(m_, RationalVector(cols_ + 1));
    basis_.resize(m_);
    for (std::size_t r = 0; r < m_; ++r) {
      if (a[r].size() != n_) throw std::invalid_argument("ragged constraint matrix");
      const bool flip = artificial_of_row_[r] == npos;
      const int sign = flip ? -1 : 1;
      for (std::size_t j = 0; j < n_; ++j) rows_[r][j] = sign * a[r][j];
      rows_[r][n_ + r] = -sign;
      rows_[r][cols_] = sign * b[r];
      if (flip) {
        basis_[r] = n_ + r;
      } else {
        basis_[r] = n_ + m_ + artificial_of_row_[r];
        rows_[r][basis_[r]] = 1;
      }
    }
    // Phase-1 objective: minimize the sum of artificials, priced out against
    // the starting basis.
    objective_.assign(cols_ + 1, 0);
    for (std::size_t r = 0; r < m_; ++r) {
      if (artificial_of_row_[r] == npos) continue;
      for (std::size_t c = 0; c <= cols_; ++c) objective_[c] -= rows_[r][c];
      objective_[basis_[r]] += 1;
    }
  }

  bool minimize_infeasibility() {
    for (;;) {
      std::size_t entering = npos;
      for (std::size_t c = 0; c < cols_; ++c) {
        if (objective_[c] < 0) {
          entering = c;
          break;
        }
      }
      if (entering == npos) break;
      std::size_t leaving = npos;
      Rational best_ratio;
      for (std::size_t r = 0; r < m_; ++r) {
        if (rows_[r][entering] <= 0) continue;
        Rational ratio = rows_[r][cols_] / rows_[r][entering];
        if (leaving == npos || ratio < best_ratio || (ratio == best_ratio && basis_[r] < basis_[leaving])) {
          leaving = r;
          best_ratio = std::move(ratio);
        }
      }
      // The phase-1 objective is bounded below by zero.
      assert(leaving != npos);
      pivot(leaving, entering);
    }
    // objective_[cols_] holds minus the current sum of artificials.
    return objective_[cols_] == 0;
  }

  RationalVector solution() const {
    RationalVector y(n_);
    for (std::size_t r = 0; r < m_; ++r) {
      if (basis_[r] < n_) y[basis_[r]] = rows_[r][cols_];
    }
    return y;
  }

 private:
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

  void pivot(std::size_t row, std::size_t col) {
    const Rational p = rows_[row][col];
    for (auto& x : rows_[row]) x /= p;
    for (std::size_t r = 0; r < m_; ++r) {
      if (r == row || rows_[r][col] == 0) continue;
      const Rational f = rows_[r][col];
      for (std::size_t c = 0; c <= cols_; ++c) rows_[r][c] -= f * rows_[row][c];
    }
    if (objective_[col] != 0) {
      const Rational f = objective_[col];
      for (std::size_t c = 0; c <= cols_; ++c) objective_[c] -= f * rows_[row][c];
    }
    basis_[row] = col;
  }

  std::size_t m_;
  std::size_t n_;
  std::size_t cols_ = 0;
  std::vector<std::size_t> artificial_of_row_;
  RationalMatrix rows_;
  RationalVector objective_;
  std::vector<std::size_t> basis_;
};

}  // namespace

std::optional<RationalVector> find_nonnegative_point(const RationalMatrix& a, const RationalVector& b) {
  if (a.size() != b.size()) throw std::invalid_argument("row count mismatch");
  Tableau t(a, b);
  if (!t.minimize_infeasibility()) return std::nullopt;
  return t.solution();
}

}  // namespace plumb
