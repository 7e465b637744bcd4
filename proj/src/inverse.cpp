#include "cremona/inverse.hpp"

#include <algorithm>
#include <numeric>

namespace cremona {

namespace {

void require_cremona(const MonomialMap& f) {
  if (!is_cremona(f)) {
    throw Error(ErrorCode::not_cremona, "map is not Cremona: |det| = " +
                                           Integer(abs(det_exact(f.log_matrix()))).get_str() +
                                           ", degree = " + f.degree().get_str());
  }
}

Integer to_integer(const Rational& q, const char* what) {
  if (q.get_den() != 1) throw Error(ErrorCode::internal, std::string(what) + " is not integral");
  return q.get_num();
}

Rational floor_of(const Rational& q) {
  Integer out;
  mpz_fdiv_q(out.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return Rational(out);
}

Rational ceil_of(const Rational& q) { return -floor_of(-q); }

bool satisfies_a(const IntMatrix& A, const IntMatrix& B, const IntVector& gamma,
                 std::vector<std::size_t>* offending = nullptr) {
  bool ok = true;
  for (std::size_t i = 0; i < B.cols(); ++i) {
    const IntVector beta = B.column(i);
    IntVector lhs = A * std::span<const Integer>(beta);
    lhs[i] -= 1;
    if (lhs != gamma) {
      ok = false;
      if (offending) offending->push_back(i);
    }
  }
  return ok;
}

Integer column_sum(const IntMatrix& m, std::size_t c) {
  Integer s = 0;
  for (std::size_t r = 0; r < m.rows(); ++r) s += m(r, c);
  return s;
}

InverseSolution finish(const IntMatrix& A, IntMatrix B, IntVector gamma) {
  auto [nb, ng] = normalize(std::move(B), std::move(gamma), A);
  Integer degree = column_sum(nb, 0);
  return InverseSolution{std::move(nb), std::move(ng), std::move(degree)};
}

}  // namespace

std::pair<IntVector, IntVector> split_signs(std::span<const Integer> v) {
  IntVector plus(v.size()), minus(v.size());
  for (std::size_t k = 0; k < v.size(); ++k) {
    if (v[k] > 0) plus[k] = v[k];
    else minus[k] = -v[k];
  }
  return {std::move(plus), std::move(minus)};
}

InverseSolution invert(const MonomialMap& f, AlgorithmTrace* trace) {
  require_cremona(f);
  const IntMatrix& A = f.log_matrix();
  const std::size_t n = f.dimension();
  const RatMatrix inv = inverse_rational(A);

  AlgorithmTrace local;
  AlgorithmTrace& t = trace ? *trace : local;
  t = AlgorithmTrace{};
  t.row_maxima.assign(n, 0);

  for (std::size_t i = 1; i < n; ++i) {
    IntVector alpha(n);
    for (std::size_t k = 0; k < n; ++k) alpha[k] = to_integer(inv(k, 0) - inv(k, i), "alpha_i");
    auto [plus, minus] = split_signs(alpha);
    for (std::size_t k = 0; k < n; ++k) t.row_maxima[k] = std::max(t.row_maxima[k], plus[k]);
    t.alpha.push_back(std::move(alpha));
    t.alpha_plus.push_back(std::move(plus));
    t.alpha_minus.push_back(std::move(minus));
  }

  IntMatrix B(n, n);
  B.set_column(0, t.row_maxima);
  for (std::size_t i = 1; i < n; ++i) {
    IntVector theta(n), beta(n);
    for (std::size_t k = 0; k < n; ++k) {
      theta[k] = t.row_maxima[k] - t.alpha_plus[i - 1][k];
      beta[k] = theta[k] + t.alpha_minus[i - 1][k];
    }
    B.set_column(i, beta);
    t.theta.push_back(std::move(theta));
  }

  IntVector gamma = A * std::span<const Integer>(t.row_maxima);
  gamma[0] -= 1;
  if (!is_nonnegative(gamma)) throw Error(ErrorCode::internal, "A beta_1 - e_1 has a negative entry");

  t.pre_normalization_B = B;
  t.pre_normalization_gamma = gamma;
  return finish(A, std::move(B), std::move(gamma));
}

std::pair<IntMatrix, IntVector> normalize(IntMatrix B, IntVector gamma, const IntMatrix& A,
                                          std::span<const std::size_t> row_order) {
  const std::size_t n = A.rows();
  if (!A.is_square() || B.rows() != n || B.cols() != n || gamma.size() != n) {
    throw Error(ErrorCode::dimension_mismatch, "normalize: shape mismatch");
  }
  if (!satisfies_a(A, B, gamma)) {
    throw Error(ErrorCode::solution_violates_a, "normalize: input violates A beta_i = gamma + e_i");
  }
  std::vector<std::size_t> order(row_order.begin(), row_order.end());
  if (order.empty()) {
    order.resize(n);
    std::iota(order.begin(), order.end(), 0);
  }
  for (std::size_t k : order) {
    Integer lo = B(k, 0);
    for (std::size_t c = 1; c < n; ++c) lo = std::min(lo, Integer(B(k, c)));
    if (lo <= 0) continue;
    for (std::size_t c = 0; c < n; ++c) B(k, c) -= lo;
    for (std::size_t r = 0; r < n; ++r) gamma[r] -= lo * A(r, k);
    if (!is_nonnegative(gamma)) throw Error(ErrorCode::internal, "normalize drove gamma negative");
  }
  return {std::move(B), std::move(gamma)};
}

DeltaLift minimal_delta(const MonomialMap& f) {
  require_cremona(f);
  const std::size_t n = f.dimension();
  const RatMatrix inv = inverse_rational(f.log_matrix());
  DeltaLift lift{RatVector(n)};
  for (std::size_t k = 0; k < n; ++k) {
    Rational lower = 0;
    for (std::size_t i = 0; i < n; ++i) lower = std::max(lower, Rational(-inv(k, i)));
    const Rational target = -inv(k, 0);
    const Rational frac = target - floor_of(target);
    // Smallest frac + z >= lower, z integer.
    lift.delta[k] = frac + ceil_of(lower - frac);
    for (std::size_t i = 0; i < n; ++i) {
      // Row k of A^{-1} has one fractional part across all columns.
      to_integer(lift.delta[k] + inv(k, i), "delta + A^{-1} e_i");
    }
  }
  return lift;
}

InverseSolution invert_via_delta(const MonomialMap& f, DeltaLift* lift) {
  const DeltaLift dl = minimal_delta(f);
  if (lift) *lift = dl;
  const IntMatrix& A = f.log_matrix();
  const std::size_t n = f.dimension();
  const RatMatrix inv = inverse_rational(A);

  IntMatrix B(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) B(k, i) = to_integer(dl.delta[k] + inv(k, i), "beta_i");
  IntVector gamma(n);
  for (std::size_t r = 0; r < n; ++r) {
    Rational g = 0;
    for (std::size_t j = 0; j < n; ++j) g += dl.delta[j] * A(r, j);
    gamma[r] = to_integer(g, "gamma");
  }
  return finish(A, std::move(B), std::move(gamma));
}

VerificationReport verify_solution(const IntMatrix& A, const InverseSolution& sol) {
  const std::size_t n = A.rows();
  if (!A.is_square() || sol.B.rows() != n || sol.B.cols() != n || sol.gamma.size() != n) {
    throw Error(ErrorCode::dimension_mismatch, "verify_solution: shape mismatch");
  }
  VerificationReport report;

  CheckResult nonneg{"nonnegative", true, {}};
  for (std::size_t c = 0; c < n; ++c) {
    const IntVector col = sol.B.column(c);
    if (!is_nonnegative(col)) nonneg.offending.push_back(c);
  }
  nonneg.passed = nonneg.offending.empty() && is_nonnegative(sol.gamma);
  report.checks.push_back(std::move(nonneg));

  CheckResult a{"a", true, {}};
  a.passed = satisfies_a(A, sol.B, sol.gamma, &a.offending);
  report.checks.push_back(std::move(a));

  CheckResult b{"b", true, {}};
  for (std::size_t r = 0; r < n; ++r) {
    bool has_zero = false;
    for (std::size_t c = 0; c < n; ++c) has_zero = has_zero || sol.B(r, c) == 0;
    if (!has_zero) b.offending.push_back(r);
  }
  b.passed = b.offending.empty();
  report.checks.push_back(std::move(b));

  CheckResult sums{"equal_column_sums", true, {}};
  for (std::size_t c = 0; c < n; ++c)
    if (column_sum(sol.B, c) != sol.inverse_degree) sums.offending.push_back(c);
  sums.passed = sums.offending.empty();
  report.checks.push_back(std::move(sums));

  const Integer det_b = abs(det_exact(sol.B));
  const Integer d = column_sum(A, 0);
  const Integer numerator = sum(sol.gamma) + 1;
  CheckResult det_identity{"det_identity", true, {}};
  det_identity.passed = d != 0 && numerator % d == 0 && det_b == numerator / d;
  report.checks.push_back(std::move(det_identity));

  CheckResult det_cols{"det_column_sum", true, {}};
  for (std::size_t c = 0; c < n; ++c)
    if (column_sum(sol.B, c) != det_b) det_cols.offending.push_back(c);
  det_cols.passed = det_cols.offending.empty();
  report.checks.push_back(std::move(det_cols));

  return report;
}

InverseSolution solution_from_inverse_map(const MonomialMap& f, const MonomialMap& inverse) {
  if (f.dimension() != inverse.dimension()) {
    throw Error(ErrorCode::dimension_mismatch, "solution_from_inverse_map: dimension mismatch");
  }
  const IntMatrix& B = inverse.log_matrix();
  const IntVector beta1 = B.column(0);
  IntVector gamma = f.log_matrix() * std::span<const Integer>(beta1);
  gamma[0] -= 1;
  return InverseSolution{B, std::move(gamma), inverse.degree()};
}

}  // namespace cremona
