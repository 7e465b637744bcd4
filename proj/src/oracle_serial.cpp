#include "cremona/oracle.hpp"
#include "oracle_internal.hpp"

namespace cremona::oracle::serial {

BruteForceResult brute_force_solutions(const IntMatrix& A, long bound) {
  if (!A.is_square()) throw Error(ErrorCode::not_square, "brute_force_solutions: not square");
  const std::size_t n = A.rows();
  const std::size_t box = detail::box_size(n, bound);

  std::vector<SolutionPair> found;
  for (std::size_t idx1 = 0; idx1 < box; ++idx1) {
    const IntVector beta1 = detail::box_point(idx1, n, bound);
    IntVector gamma = A * std::span<const Integer>(beta1);
    gamma[0] -= 1;
    if (!is_nonnegative(gamma)) continue;

    std::vector<std::vector<IntVector>> others(n - 1);
    for (std::size_t i = 1; i < n; ++i) {
      for (std::size_t idx = 0; idx < box; ++idx) {
        const IntVector beta = detail::box_point(idx, n, bound);
        IntVector lhs = A * std::span<const Integer>(beta);
        lhs[i] -= 1;
        if (lhs == gamma) others[i - 1].push_back(beta);
      }
      if (others[i - 1].empty()) break;
    }
    detail::expand_candidates(beta1, gamma, others, true, found);
  }
  detail::sort_solutions(found);

  const Integer d = detail::common_column_sum(A);
  BruteForceResult result{std::move(found), d > 0 && abs(det_exact(A)) == d};
  if (result.solutions.empty() && result.cremona) {
    throw Error(ErrorCode::bound_exhausted,
                "no solution with entries <= " + std::to_string(bound) + " for a Cremona matrix");
  }
  return result;
}

}  // namespace cremona::oracle::serial
