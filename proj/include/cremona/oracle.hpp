#pragma once

// Bounded brute-force oracles for the normalized inverse.
//
// Both searches are complete only up to `bound`: brute_force_solutions
// boxes the entries of B, cone_minimal_tau1 boxes every cone coordinate.
// Neither consults invert().

#include <cstddef>
#include <vector>

#include "cremona/exactmat.hpp"

namespace cremona::oracle {

/// Homogeneous system A beta_i - gamma - tau e_i = 0 (i = 1..n) in
/// n^2 + n + 1 unknowns ordered (beta_1 | ... | beta_n | gamma | tau).
struct ConeSystem {
  std::size_t n;
  std::size_t num_vars;
  IntMatrix constraint_rows;  // n^2 x num_vars
};

ConeSystem build_cone_system(const IntMatrix& A);

/// True iff x is a nonnegative integral point of the cone.
bool in_cone(const ConeSystem& cone, const IntVector& x);

struct SolutionPair {
  IntMatrix B;
  IntVector gamma;

  friend bool operator==(const SolutionPair&, const SolutionPair&) = default;
};

struct BruteForceResult {
  std::vector<SolutionPair> solutions;  // sorted by flattened B
  bool cremona;                          // |det A| == common column sum
};

/// Every nonnegative (B, gamma) with entries <= bound satisfying
/// A beta_i = gamma + e_i and having a zero in each row of B.
/// Parallel (OpenMP). Throws bound_exhausted when a Cremona A yields nothing.
BruteForceResult brute_force_solutions(const IntMatrix& A, long bound);

/// The h' family: for each variable k, (e_k, ..., e_k, A e_k, 0).
std::vector<IntVector> tau0_witnesses(const IntMatrix& A);

/// Flattens (B, gamma, tau) in cone coordinate order.
IntVector flatten(const IntMatrix& B, const IntVector& gamma, const Integer& tau);

struct Tau1Search {
  IntVector point;                    // the irreducible tau = 1 point
  std::size_t tau1_points = 0;        // tau = 1 cone points inside the box
  std::size_t reducible_points = 0;   // of which reducible by some h'
};

/// Searches the tau = 1 slice of the cone within the box and keeps the points
/// that are not (tau = 1 point) + h'_k for any k. Throws bound_exhausted if
/// none survive, oracle_contradiction if more than one does.
Tau1Search cone_minimal_tau1(const IntMatrix& A, long bound);

namespace serial {
/// Single-threaded reference: nested enumeration of every column against
/// the whole box, no lookup table.
BruteForceResult brute_force_solutions(const IntMatrix& A, long bound);
}  // namespace serial

}  // namespace cremona::oracle
