#pragma once

// The normalized monomial inverse of a Cremona monomial map.
//
// For a log-matrix A of degree d with |det A| = d there is exactly one pair
// (B, gamma) of nonnegative integer data with
//   (a) A * beta_i = gamma + e_i for every column beta_i of B, and
//   (b) every row of B contains a zero.
// B is then the log-matrix of the inverse map.

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "cremona/exactmat.hpp"
#include "cremona/monomap.hpp"

namespace cremona {

struct InverseSolution {
  IntMatrix B;             // columns beta_1..beta_n
  IntVector gamma;
  Integer inverse_degree;  // common column sum of B

  MonomialMap as_map() const { return MonomialMap(B); }

  friend bool operator==(const InverseSolution&, const InverseSolution&) = default;
};

/// Intermediate values of the row-maxima construction. Vectors indexed by
/// i = 2..n are stored at position i - 2.
struct AlgorithmTrace {
  std::vector<IntVector> alpha;        // A^{-1}(e_1 - e_i)
  std::vector<IntVector> alpha_plus;
  std::vector<IntVector> alpha_minus;
  IntVector row_maxima;                // m_k = max_i alpha_plus[i][k]; equals beta_1
  std::vector<IntVector> theta;        // beta_1 - alpha_plus[i]
  IntMatrix pre_normalization_B = IntMatrix(1, 1);
  IntVector pre_normalization_gamma;
};

/// Rational shift delta with delta + A^{-1} e_i in N^n for every i.
struct DeltaLift {
  RatVector delta;
};

/// Builds beta_1 from the row maxima of the positive parts of
/// A^{-1}(e_1 - e_i), sets beta_i = theta_i + alpha_i^-, gamma = A beta_1 - e_1,
/// then normalizes. Throws not_cremona unless |det A| = d.
InverseSolution invert(const MonomialMap& f, AlgorithmTrace* trace = nullptr);

/// Subtracts the row minimum from each all-positive row k of B and the
/// matching multiple of column k of A from gamma, visiting rows in
/// `row_order` (default 0..n-1). Throws solution_violates_a if (a) fails on
/// entry, internal if gamma ever turns negative.
std::pair<IntMatrix, IntVector> normalize(IntMatrix B, IntVector gamma, const IntMatrix& A,
                                          std::span<const std::size_t> row_order = {});

/// Componentwise-minimal delta: delta_k is the least rational >= -min_i (A^{-1})_{k,i}
/// (and >= 0) whose fractional part matches -(A^{-1})_{k,1}.
DeltaLift minimal_delta(const MonomialMap& f);

/// beta_i = delta + A^{-1} e_i, gamma = sum_j delta_j v_j, then normalize.
InverseSolution invert_via_delta(const MonomialMap& f, DeltaLift* lift = nullptr);

struct CheckResult {
  std::string name;
  bool passed;
  std::vector<std::size_t> offending;  // 0-based column/row indices
};

struct VerificationReport {
  std::vector<CheckResult> checks;

  bool passed() const {
    for (const auto& c : checks)
      if (!c.passed) return false;
    return true;
  }
  const CheckResult* find(std::string_view name) const {
    for (const auto& c : checks)
      if (c.name == name) return &c;
    return nullptr;
  }
};

/// Checks, each reported separately:
///   nonnegative, a (A beta_i = gamma + e_i), b (zero in every row),
///   equal_column_sums, det_identity (|det B| = (|gamma|+1)/d),
///   det_column_sum (|det B| = |beta_i|).
VerificationReport verify_solution(const IntMatrix& A, const InverseSolution& sol);

/// Reads a solution off an arbitrary log-matrix of a candidate inverse:
/// B is its reduced form and gamma = A beta_1 - e_1.
InverseSolution solution_from_inverse_map(const MonomialMap& f, const MonomialMap& inverse);

/// Positive and negative parts, v = plus - minus with disjoint supports.
std::pair<IntVector, IntVector> split_signs(std::span<const Integer> v);

}  // namespace cremona
