#pragma once

#include <optional>
#include <vector>

#include "plumb/rational.hpp"

namespace plumb {

using RationalMatrix = std::vector<RationalVector>;

/// Phase-1 simplex over exact rationals: finds y >= 0 with A y >= b, or
/// reports infeasibility. Bland's rule for both entering and leaving choices,
/// so the iteration cannot cycle. A has one row per constraint.
std::optional<RationalVector> find_nonnegative_point(const RationalMatrix& a, const RationalVector& b);

}  // namespace plumb
