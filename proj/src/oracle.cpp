#include "cremona/oracle.hpp"

#include <omp.h>

#include <algorithm>
#include <map>

#include "oracle_internal.hpp"

namespace cremona::oracle {

namespace detail {

std::size_t box_size(std::size_t n, long bound) {
  if (bound < 0) throw Error(ErrorCode::dimension_mismatch, "oracle bound must be >= 0");
  constexpr std::size_t kMaxBox = std::size_t{1} << 26;
  std::size_t size = 1;
  for (std::size_t i = 0; i < n; ++i) {
    size *= static_cast<std::size_t>(bound) + 1;
    if (size > kMaxBox) throw Error(ErrorCode::dimension_mismatch, "oracle search box too large");
  }
  return size;
}

IntVector box_point(std::size_t idx, std::size_t n, long bound) {
  const auto radix = static_cast<std::size_t>(bound) + 1;
  IntVector v(n);
  for (std::size_t k = 0; k < n; ++k) {
    v[k] = static_cast<unsigned long>(idx % radix);
    idx /= radix;
  }
  return v;
}

bool has_zero_in_every_row(const IntMatrix& B) {
  for (std::size_t r = 0; r < B.rows(); ++r) {
    bool zero = false;
    for (std::size_t c = 0; c < B.cols() && !zero; ++c) zero = B(r, c) == 0;
    if (!zero) return false;
  }
  return true;
}

Integer common_column_sum(const IntMatrix& A) {
  Integer first = 0;
  for (std::size_t r = 0; r < A.rows(); ++r) first += A(r, 0);
  for (std::size_t c = 1; c < A.cols(); ++c) {
    Integer s = 0;
    for (std::size_t r = 0; r < A.rows(); ++r) s += A(r, c);
    if (s != first) return -1;
  }
  return first;
}

void expand_candidates(const IntVector& beta1, const IntVector& gamma,
                       const std::vector<std::vector<IntVector>>& others, bool require_b,
                       std::vector<SolutionPair>& out) {
  const std::size_t n = beta1.size();
  for (const auto& list : others)
    if (list.empty()) return;
  std::vector<std::size_t> pick(others.size(), 0);
  while (true) {
    IntMatrix B(n, n);
    B.set_column(0, beta1);
    for (std::size_t i = 0; i < others.size(); ++i) B.set_column(i + 1, others[i][pick[i]]);
    if (!require_b || has_zero_in_every_row(B)) out.push_back(SolutionPair{std::move(B), gamma});
    std::size_t i = 0;
    while (i < pick.size() && ++pick[i] == others[i].size()) pick[i++] = 0;
    if (i == pick.size()) break;
  }
}

void sort_solutions(std::vector<SolutionPair>& solutions) {
  std::sort(solutions.begin(), solutions.end(), [](const SolutionPair& x, const SolutionPair& y) {
    const IntVector fx = flatten(x.B, x.gamma, 0), fy = flatten(y.B, y.gamma, 0);
    return fx < fy;
  });
}

}  // namespace detail

namespace {

std::vector<SolutionPair> enumerate_parallel(const IntMatrix& A, long bound, bool require_b) {
  const std::size_t n = A.rows();
  const std::size_t box = detail::box_size(n, bound);

  std::vector<IntVector> images(box);
#pragma omp parallel for schedule(static)
  for (long idx = 0; idx < static_cast<long>(box); ++idx) {
    const IntVector beta = detail::box_point(static_cast<std::size_t>(idx), n, bound);
    images[static_cast<std::size_t>(idx)] = A * std::span<const Integer>(beta);
  }
  std::map<IntVector, std::vector<std::size_t>> preimages;
  for (std::size_t idx = 0; idx < box; ++idx) preimages[images[idx]].push_back(idx);

  std::vector<SolutionPair> found;
#pragma omp parallel
  {
    std::vector<SolutionPair> local;
#pragma omp for schedule(dynamic, 64) nowait
    for (long idx = 0; idx < static_cast<long>(box); ++idx) {
      IntVector gamma = images[static_cast<std::size_t>(idx)];
      gamma[0] -= 1;
      if (!is_nonnegative(gamma)) continue;
      std::vector<std::vector<IntVector>> others(n - 1);
      bool feasible = true;
      for (std::size_t i = 1; i < n && feasible; ++i) {
        IntVector rhs = gamma;
        rhs[i] += 1;
        const auto it = preimages.find(rhs);
        if (it == preimages.end()) {
          feasible = false;
          break;
        }
        for (std::size_t p : it->second) others[i - 1].push_back(detail::box_point(p, n, bound));
      }
      if (!feasible) continue;
      detail::expand_candidates(detail::box_point(static_cast<std::size_t>(idx), n, bound), gamma,
                                others, require_b, local);
    }
#pragma omp critical(cremona_oracle_merge)
    found.insert(found.end(), std::make_move_iterator(local.begin()),
                 std::make_move_iterator(local.end()));
  }
  detail::sort_solutions(found);
  return found;
}

}  // namespace

ConeSystem build_cone_system(const IntMatrix& A) {
  if (!A.is_square()) throw Error(ErrorCode::not_square, "cone system needs a square matrix");
  const std::size_t n = A.rows();
  ConeSystem cone{n, n * n + n + 1, IntMatrix(n * n, n * n + n + 1)};
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      const std::size_t row = i * n + k;
      for (std::size_t j = 0; j < n; ++j) cone.constraint_rows(row, i * n + j) = A(k, j);
      cone.constraint_rows(row, n * n + k) = -1;
      if (k == i) cone.constraint_rows(row, n * n + n) = -1;
    }
  return cone;
}

bool in_cone(const ConeSystem& cone, const IntVector& x) {
  if (x.size() != cone.num_vars) return false;
  if (!is_nonnegative(x)) return false;
  const IntVector lhs = cone.constraint_rows * std::span<const Integer>(x);
  return std::all_of(lhs.begin(), lhs.end(), [](const Integer& v) { return v == 0; });
}

IntVector flatten(const IntMatrix& B, const IntVector& gamma, const Integer& tau) {
  IntVector out;
  out.reserve(B.rows() * B.cols() + gamma.size() + 1);
  for (std::size_t c = 0; c < B.cols(); ++c)
    for (std::size_t r = 0; r < B.rows(); ++r) out.push_back(B(r, c));
  out.insert(out.end(), gamma.begin(), gamma.end());
  out.push_back(tau);
  return out;
}

BruteForceResult brute_force_solutions(const IntMatrix& A, long bound) {
  if (!A.is_square()) throw Error(ErrorCode::not_square, "brute_force_solutions: not square");
  const Integer d = detail::common_column_sum(A);
  BruteForceResult result{enumerate_parallel(A, bound, true), d > 0 && abs(det_exact(A)) == d};
  if (result.solutions.empty() && result.cremona) {
    throw Error(ErrorCode::bound_exhausted,
                "no solution with entries <= " + std::to_string(bound) + " for a Cremona matrix");
  }
  return result;
}

std::vector<IntVector> tau0_witnesses(const IntMatrix& A) {
  const std::size_t n = A.rows();
  std::vector<IntVector> out;
  for (std::size_t k = 0; k < n; ++k) {
    IntMatrix B(n, n);
    for (std::size_t c = 0; c < n; ++c) B(k, c) = 1;
    out.push_back(flatten(B, A.column(k), 0));
  }
  return out;
}

Tau1Search cone_minimal_tau1(const IntMatrix& A, long bound) {
  if (!A.is_square()) throw Error(ErrorCode::not_square, "cone_minimal_tau1: not square");
  const ConeSystem cone = build_cone_system(A);
  const auto witnesses = tau0_witnesses(A);
  Tau1Search search;
  std::vector<IntVector> irreducible;
  for (const auto& sol : enumerate_parallel(A, bound, false)) {
    if (!std::all_of(sol.gamma.begin(), sol.gamma.end(),
                     [bound](const Integer& g) { return g <= bound; }))
      continue;
    const IntVector x = flatten(sol.B, sol.gamma, 1);
    if (!in_cone(cone, x)) throw Error(ErrorCode::internal, "enumerated point outside the cone");
    ++search.tau1_points;
    bool reducible = false;
    for (const auto& h : witnesses) {
      IntVector rest(x.size());
      for (std::size_t j = 0; j < x.size(); ++j) rest[j] = x[j] - h[j];
      if (in_cone(cone, rest)) {
        reducible = true;
        break;
      }
    }
    if (reducible) ++search.reducible_points;
    else irreducible.push_back(x);
  }
  if (irreducible.empty()) {
    throw Error(ErrorCode::bound_exhausted,
                "no irreducible tau = 1 point with coordinates <= " + std::to_string(bound));
  }
  if (irreducible.size() > 1) {
    throw Error(ErrorCode::oracle_contradiction,
                std::to_string(irreducible.size()) + " irreducible tau = 1 points found");
  }
  search.point = std::move(irreducible.front());
  return search;
}

}  // namespace cremona::oracle
