#pragma once

// Exact integer linear algebra on the small dense systems that arise when a
// dimension vector is expressed over a root basis.  Elimination is
// fraction-free over 128-bit integers, so no precision is ever lost.

#include <vector>

#include "quiverkit/quiver.hpp"

namespace quiverkit {

// Solve sum_k x_k * cols[k] = target exactly over the integers.  The columns
// must be linearly independent and the solution integral and nonnegative;
// otherwise Err::NonIntegerExpansion / Err::NegativeExpansion / Err::Internal
// is thrown, with `what` naming the object being expanded.
std::vector<Int> solve_nonneg_integer(const std::vector<DimVector>& cols,
                                      const std::vector<Int>& target,
                                      const char* what);

// Rank over the rationals of a list of integer row vectors.
int integer_rank(const std::vector<std::vector<Int>>& rows);

}  // namespace quiverkit
