#pragma once

// Monomial maps P^{n-1} --> P^{n-1} and their log-matrices.
//
// Orientation: column i of the log-matrix is the exponent vector of the
// i-th defining monomial. Two log-matrices define the same rational map iff
// they agree after subtracting every row's minimum (cancelling the gcd
// monomial); MonomialMap only ever stores that reduced representative.

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "cremona/exactmat.hpp"

namespace cremona {

/// Bijection on {0..n-1}. Printed 1-based as a digit string, e.g. "132".
class Permutation {
 public:
  explicit Permutation(std::vector<std::size_t> images);

  static Permutation identity(std::size_t n);
  /// All n! permutations in lexicographic order of their image sequences.
  static std::vector<Permutation> all(std::size_t n);
  /// "132" -> 0->0, 1->2, 2->1. Digits 1-9 only; comma-separated for n > 9.
  static Permutation parse(std::string_view text);

  std::size_t size() const noexcept { return images_.size(); }
  std::size_t operator()(std::size_t i) const { return images_[i]; }
  const std::vector<std::size_t>& images() const noexcept { return images_; }
  Permutation inverse() const;
  bool is_identity() const;
  std::string to_string() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<std::size_t> images_;
};

class MonomialMap {
 public:
  /// Reduces `log_matrix` and validates the result; see reduce_canonical.
  explicit MonomialMap(const IntMatrix& log_matrix);

  std::size_t dimension() const noexcept { return log_.rows(); }
  const IntMatrix& log_matrix() const noexcept { return log_; }
  const Integer& degree() const noexcept { return degree_; }
  IntVector monomial(std::size_t i) const { return log_.column(i); }

  friend bool operator==(const MonomialMap& a, const MonomialMap& b) {
    return a.log_ == b.log_;
  }

 private:
  IntMatrix log_;
  Integer degree_;
};

/// The reduced map plus the exponent of the cancelled gcd monomial
/// (the per-row minima). Adding `common_factor` back to every column
/// reproduces the input.
struct Reduction {
  MonomialMap map;
  IntVector common_factor;
};

Reduction reduce_with_factor(const IntMatrix& log_matrix);
MonomialMap reduce_canonical(const IntMatrix& log_matrix);

/// Text grammar: comma-separated monomials in x1..xn, `*` for product,
/// `^` for power, whitespace ignored. n is the number of monomials.
MonomialMap parse_map(std::string_view text);
/// Inverse of parse_map on canonical maps: "x1^2, x1*x2, x2*x3".
std::string format_map(const MonomialMap& f);

/// F G (first G, then F): log(F G) = log(G) * log(F), then reduced.
MonomialMap compose(const MonomialMap& f, const MonomialMap& g);
bool maps_equal(const MonomialMap& f, const MonomialMap& g);
MonomialMap identity_map(std::size_t n);

/// |det(log-matrix)| == degree.
bool is_cremona(const MonomialMap& f);

struct DifferenceWitness {
  std::size_t i;
  std::size_t j;
  RatVector value;  // A^{-1}(e_i - e_j)
  bool integral;
};

struct DifferenceIntegrality {
  bool all_integral;
  std::vector<DifferenceWitness> witnesses;  // every pair i < j, in order
};

/// Evaluates A^{-1}(e_i - e_j) for all i < j. Throws not_cremona otherwise.
DifferenceIntegrality check_difference_integrality(const MonomialMap& f);

/// Relabels source variables by `source` (row r -> source(r)) and target
/// monomials by `target` (column c -> target(c)).
IntMatrix permute(const IntMatrix& m, const Permutation& source, const Permutation& target);
MonomialMap permute(const MonomialMap& f, const Permutation& source, const Permutation& target);

/// The degree-1 map obtained by permuting the identity; permute(F, s, t)
/// equals compose(permutation_map(id, t), compose(F, permutation_map(s, id))).
MonomialMap permutation_map(const Permutation& source, const Permutation& target);

}  // namespace cremona
