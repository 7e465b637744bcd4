#include "cremona/exactmat.hpp"

#include <omp.h>

#include <algorithm>
#include <numeric>
#include <sstream>

namespace cremona {

namespace {

void require_square(const IntMatrix& m, const char* what) {
  if (!m.is_square()) {
    throw Error(ErrorCode::not_square, std::string(what) + ": matrix is not square");
  }
}

void require_perturbation_shapes(const IntMatrix& g, const IntMatrix& d) {
  require_square(g, "det_diag_perturbation");
  require_square(d, "det_diag_perturbation");
  if (g.rows() != d.rows()) {
    throw Error(ErrorCode::dimension_mismatch, "det_diag_perturbation: size mismatch");
  }
  if (g.rows() > 8) {
    throw Error(ErrorCode::dimension_mismatch, "det_diag_perturbation: n > 8 not supported");
  }
  for (std::size_t r = 0; r < d.rows(); ++r)
    for (std::size_t c = 0; c < d.cols(); ++c)
      if (r != c && d(r, c) != 0) {
        throw Error(ErrorCode::not_diagonal, "det_diag_perturbation: D is not diagonal");
      }
}

Integer subset_term(const IntMatrix& g, const IntMatrix& d, unsigned mask) {
  const auto n = static_cast<unsigned>(g.rows());
  Integer weight = 1;
  for (unsigned i = 0; i < n; ++i) {
    if (mask & (1u << i)) {
      weight *= d(i, i);
      if (weight == 0) return 0;
    }
  }
  const unsigned full = (1u << n) - 1;
  return weight * principal_minor_leibniz(g, full & ~mask);
}

}  // namespace

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols() != b.rows()) throw Error(ErrorCode::dimension_mismatch, "matrix product shapes");
  IntMatrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (a(i, k) == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) += a(i, k) * b(k, j);
    }
  return out;
}

IntMatrix operator+(const IntMatrix& a, const IntMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw Error(ErrorCode::dimension_mismatch, "matrix sum shapes");
  }
  IntMatrix out(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = a(i, j) + b(i, j);
  return out;
}

IntVector operator*(const IntMatrix& a, std::span<const Integer> x) {
  if (a.cols() != x.size()) throw Error(ErrorCode::dimension_mismatch, "matrix-vector shapes");
  IntVector out(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) out[i] += a(i, k) * x[k];
  return out;
}

RatMatrix operator*(const RatMatrix& a, const RatMatrix& b) {
  if (a.cols() != b.rows()) throw Error(ErrorCode::dimension_mismatch, "matrix product shapes");
  RatMatrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k)
      for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) += a(i, k) * b(k, j);
  return out;
}

RatMatrix to_rational(const IntMatrix& m) {
  RatMatrix out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = Rational(m(i, j));
  return out;
}

Integer det_exact(const IntMatrix& m) {
  require_square(m, "det_exact");
  const std::size_t n = m.rows();
  IntMatrix w = m;
  int sign = 1;
  Integer prev = 1;
  for (std::size_t k = 0; k < n; ++k) {
    // Full pivot search over the trailing block; strict '>' keeps the
    // first (lowest row, then column) maximal entry.
    std::size_t pr = k, pc = k;
    Integer best = 0;
    for (std::size_t r = k; r < n; ++r)
      for (std::size_t c = k; c < n; ++c) {
        Integer v = abs(w(r, c));
        if (v > best) {
          best = v;
          pr = r;
          pc = c;
        }
      }
    if (best == 0) return 0;
    if (pr != k) {
      for (std::size_t c = 0; c < n; ++c) std::swap(w(k, c), w(pr, c));
      sign = -sign;
    }
    if (pc != k) {
      for (std::size_t r = 0; r < n; ++r) std::swap(w(r, k), w(r, pc));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Integer t = w(i, j) * w(k, k) - w(i, k) * w(k, j);
        mpz_divexact(w(i, j).get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      w(i, k) = 0;
    }
    prev = w(k, k);
  }
  return sign * w(n - 1, n - 1);
}

IntMatrix adjugate(const IntMatrix& m) {
  require_square(m, "adjugate");
  const std::size_t n = m.rows();
  IntMatrix adj(n, n);
  if (n == 1) {
    adj(0, 0) = 1;
    return adj;
  }
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) {
      IntMatrix minor(n - 1, n - 1);
      for (std::size_t i = 0, mi = 0; i < n; ++i) {
        if (i == r) continue;
        for (std::size_t j = 0, mj = 0; j < n; ++j) {
          if (j == c) continue;
          minor(mi, mj++) = m(i, j);
        }
        ++mi;
      }
      Integer cof = det_exact(minor);
      if ((r + c) % 2 == 1) cof = -cof;
      adj(c, r) = cof;
    }
  return adj;
}

RatMatrix inverse_rational(const IntMatrix& m) {
  require_square(m, "inverse_rational");
  const Integer det = det_exact(m);
  if (det == 0) throw Error(ErrorCode::singular, "inverse_rational: singular matrix");
  const IntMatrix adj = adjugate(m);
  RatMatrix inv(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) {
      inv(i, j) = Rational(adj(i, j), det);
      inv(i, j).canonicalize();
    }
  return inv;
}

Integer principal_minor_leibniz(const IntMatrix& g, unsigned keep) {
  std::vector<std::size_t> idx;
  for (std::size_t i = 0; i < g.rows(); ++i)
    if (keep & (1u << i)) idx.push_back(i);
  if (idx.empty()) return 1;

  std::vector<std::size_t> perm(idx.size());
  std::iota(perm.begin(), perm.end(), 0);
  Integer total = 0;
  do {
    Integer term = 1;
    for (std::size_t i = 0; i < idx.size() && term != 0; ++i) term *= g(idx[i], idx[perm[i]]);
    if (term == 0) continue;
    std::size_t inversions = 0;
    for (std::size_t i = 0; i < perm.size(); ++i)
      for (std::size_t j = i + 1; j < perm.size(); ++j)
        if (perm[i] > perm[j]) ++inversions;
    if (inversions % 2 == 0) total += term;
    else total -= term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

Integer det_diag_perturbation(const IntMatrix& g, const IntMatrix& d) {
  require_perturbation_shapes(g, d);
  const auto subsets = static_cast<long>(1u << g.rows());
  Integer total = 0;
#pragma omp parallel
  {
    Integer local = 0;
#pragma omp for schedule(dynamic, 4) nowait
    for (long mask = 0; mask < subsets; ++mask) {
      local += subset_term(g, d, static_cast<unsigned>(mask));
    }
#pragma omp critical(cremona_det_perturbation)
    total += local;
  }
  return total;
}

namespace serial {

Integer det_diag_perturbation(const IntMatrix& g, const IntMatrix& d) {
  require_perturbation_shapes(g, d);
  const unsigned subsets = 1u << g.rows();
  Integer total = 0;
  for (unsigned mask = 0; mask < subsets; ++mask) total += subset_term(g, d, mask);
  return total;
}

}  // namespace serial

Integer sum(std::span<const Integer> v) {
  Integer s = 0;
  for (const auto& x : v) s += x;
  return s;
}

bool is_nonnegative(std::span<const Integer> v) {
  return std::all_of(v.begin(), v.end(), [](const Integer& x) { return x >= 0; });
}

std::string to_string(std::span<const Integer> v) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  os << ')';
  return os.str();
}

std::string to_string(const IntMatrix& m) {
  std::ostringstream os;
  os << '[';
  for (std::size_t r = 0; r < m.rows(); ++r) {
    os << (r ? ",[" : "[");
    for (std::size_t c = 0; c < m.cols(); ++c) os << (c ? "," : "") << m(r, c);
    os << ']';
  }
  os << ']';
  return os.str();
}

}  // namespace cremona
