#pragma once

#include <cstddef>
#include <vector>

#include "cremona/oracle.hpp"

namespace cremona::oracle::detail {

/// Number of points in [0, bound]^n; throws if the box is unreasonably large.
std::size_t box_size(std::size_t n, long bound);

/// The idx-th point of the box in mixed-radix order (coordinate 0 fastest).
IntVector box_point(std::size_t idx, std::size_t n, long bound);

bool has_zero_in_every_row(const IntMatrix& B);

Integer common_column_sum(const IntMatrix& A);

/// Combines per-column candidate lists into full (B, gamma) pairs.
void expand_candidates(const IntVector& beta1, const IntVector& gamma,
                       const std::vector<std::vector<IntVector>>& others, bool require_b,
                       std::vector<SolutionPair>& out);

void sort_solutions(std::vector<SolutionPair>& solutions);

}  // namespace cremona::oracle::detail
