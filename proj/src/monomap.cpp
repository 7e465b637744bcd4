#include "cremona/monomap.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <set>
#include <sstream>

namespace cremona {

// ---------------------------------------------------------------- Permutation

Permutation::Permutation(std::vector<std::size_t> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (auto v : images_) {
    if (v >= images_.size() || seen[v]) {
      throw Error(ErrorCode::parse_error, "permutation is not a bijection");
    }
    seen[v] = true;
  }
}

Permutation Permutation::identity(std::size_t n) {
  std::vector<std::size_t> v(n);
  std::iota(v.begin(), v.end(), 0);
  return Permutation(std::move(v));
}

std::vector<Permutation> Permutation::all(std::size_t n) {
  std::vector<std::size_t> v(n);
  std::iota(v.begin(), v.end(), 0);
  std::vector<Permutation> out;
  do {
    out.emplace_back(v);
  } while (std::next_permutation(v.begin(), v.end()));
  return out;
}

Permutation Permutation::parse(std::string_view text) {
  std::vector<std::size_t> images;
  if (text.find(',') != std::string_view::npos) {
    std::size_t value = 0;
    bool any = false;
    for (char ch : text) {
      if (std::isdigit(static_cast<unsigned char>(ch))) {
        value = value * 10 + static_cast<std::size_t>(ch - '0');
        any = true;
      } else if (ch == ',') {
        if (!any || value == 0) throw Error(ErrorCode::parse_error, "bad permutation");
        images.push_back(value - 1);
        value = 0;
        any = false;
      } else if (!std::isspace(static_cast<unsigned char>(ch))) {
        throw Error(ErrorCode::parse_error, "bad permutation character");
      }
    }
    if (!any || value == 0) throw Error(ErrorCode::parse_error, "bad permutation");
    images.push_back(value - 1);
  } else {
    for (char ch : text) {
      if (ch < '1' || ch > '9') throw Error(ErrorCode::parse_error, "bad permutation character");
      images.push_back(static_cast<std::size_t>(ch - '1'));
    }
  }
  if (images.empty()) throw Error(ErrorCode::parse_error, "empty permutation");
  return Permutation(std::move(images));
}

Permutation Permutation::inverse() const {
  std::vector<std::size_t> inv(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) inv[images_[i]] = i;
  return Permutation(std::move(inv));
}

bool Permutation::is_identity() const {
  for (std::size_t i = 0; i < images_.size(); ++i)
    if (images_[i] != i) return false;
  return true;
}

std::string Permutation::to_string() const {
  std::string out;
  const bool wide = images_.size() > 9;
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (wide && i) out += ',';
    out += std::to_string(images_[i] + 1);
  }
  return out;
}

// ---------------------------------------------------------------- MonomialMap

namespace {

IntVector column_sums(const IntMatrix& m) {
  IntVector sums(m.cols());
  for (std::size_t c = 0; c < m.cols(); ++c)
    for (std::size_t r = 0; r < m.rows(); ++r) sums[c] += m(r, c);
  return sums;
}

void check_shape_and_signs(const IntMatrix& m) {
  if (!m.is_square()) throw Error(ErrorCode::not_square, "log-matrix must be square");
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c)
      if (m(r, c) < 0) throw Error(ErrorCode::invalid_map, "negative exponent");
  const IntVector sums = column_sums(m);
  for (const auto& s : sums)
    if (s != sums.front()) throw Error(ErrorCode::unequal_degrees, "monomials of unequal degree");
}

}  // namespace

MonomialMap::MonomialMap(const IntMatrix& log_matrix) : log_(log_matrix) {
  check_shape_and_signs(log_);
  const std::size_t n = log_.rows();
  for (std::size_t r = 0; r < n; ++r) {
    Integer lo = log_(r, 0);
    for (std::size_t c = 1; c < n; ++c) lo = std::min(lo, log_(r, c));
    if (lo != 0)
      for (std::size_t c = 0; c < n; ++c) log_(r, c) -= lo;
  }
  degree_ = 0;
  for (std::size_t r = 0; r < n; ++r) degree_ += log_(r, 0);
  if (degree_ < 1) throw Error(ErrorCode::invalid_map, "degree must be at least 1");

  std::set<IntVector> columns;
  for (std::size_t c = 0; c < n; ++c)
    if (!columns.insert(log_.column(c)).second) {
      throw Error(ErrorCode::invalid_map, "duplicate monomials");
    }
  for (std::size_t r = 0; r < n; ++r) {
    bool positive = false;
    for (std::size_t c = 0; c < n && !positive; ++c) positive = log_(r, c) > 0;
    if (!positive) {
      throw Error(ErrorCode::invalid_map,
                  "variable x" + std::to_string(r + 1) + " divides no monomial");
    }
  }
}

Reduction reduce_with_factor(const IntMatrix& log_matrix) {
  check_shape_and_signs(log_matrix);
  IntVector factor(log_matrix.rows());
  for (std::size_t r = 0; r < log_matrix.rows(); ++r) {
    factor[r] = log_matrix(r, 0);
    for (std::size_t c = 1; c < log_matrix.cols(); ++c)
      factor[r] = std::min(factor[r], Integer(log_matrix(r, c)));
  }
  return Reduction{MonomialMap(log_matrix), std::move(factor)};
}

MonomialMap reduce_canonical(const IntMatrix& log_matrix) { return MonomialMap(log_matrix); }

// ---------------------------------------------------------------- text form

namespace {

class MapParser {
 public:
  explicit MapParser(std::string_view text) {
    for (char ch : text)
      if (!std::isspace(static_cast<unsigned char>(ch))) s_.push_back(ch);
  }

  std::vector<std::vector<std::pair<std::size_t, Integer>>> parse() {
    std::vector<std::vector<std::pair<std::size_t, Integer>>> monomials;
    if (s_.empty()) fail("empty input");
    monomials.push_back(monomial());
    while (pos_ < s_.size()) {
      expect(',');
      monomials.push_back(monomial());
    }
    return monomials;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw Error(ErrorCode::parse_error,
                "syntax error at position " + std::to_string(pos_) + ": " + what);
  }

  void expect(char ch) {
    if (pos_ >= s_.size() || s_[pos_] != ch) fail(std::string("expected '") + ch + "'");
    ++pos_;
  }

  std::string digits() {
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected digits");
    return s_.substr(start, pos_ - start);
  }

  std::vector<std::pair<std::size_t, Integer>> monomial() {
    std::vector<std::pair<std::size_t, Integer>> factors;
    factors.push_back(factor());
    while (pos_ < s_.size() && s_[pos_] == '*') {
      ++pos_;
      factors.push_back(factor());
    }
    return factors;
  }

  std::pair<std::size_t, Integer> factor() {
    if (pos_ < s_.size() && s_[pos_] == '1' &&
        (pos_ + 1 == s_.size() || s_[pos_ + 1] == ',' || s_[pos_ + 1] == '*')) {
      ++pos_;  // the constant monomial 1
      return {0, 0};
    }
    expect('x');
    const std::string index = digits();
    if (index.size() > 6) fail("variable index too large");
    const auto var = static_cast<std::size_t>(std::stoul(index));
    if (var == 0) fail("variables are numbered from 1");
    Integer exponent = 1;
    if (pos_ < s_.size() && s_[pos_] == '^') {
      ++pos_;
      exponent = Integer(digits());
    }
    return {var, exponent};
  }

  std::string s_;
  std::size_t pos_ = 0;
};

}  // namespace

MonomialMap parse_map(std::string_view text) {
  const auto monomials = MapParser(text).parse();
  const std::size_t n = monomials.size();
  IntMatrix log(n, n);
  for (std::size_t c = 0; c < n; ++c)
    for (const auto& [var, exponent] : monomials[c]) {
      if (var == 0) continue;
      if (var > n) {
        throw Error(ErrorCode::parse_error,
                    "variable x" + std::to_string(var) + " exceeds n=" + std::to_string(n));
      }
      log(var - 1, c) += exponent;
    }
  return MonomialMap(log);
}

std::string format_map(const MonomialMap& f) {
  const IntMatrix& a = f.log_matrix();
  std::ostringstream os;
  for (std::size_t c = 0; c < a.cols(); ++c) {
    if (c) os << ", ";
    bool first = true;
    for (std::size_t r = 0; r < a.rows(); ++r) {
      if (a(r, c) == 0) continue;
      if (!first) os << '*';
      first = false;
      os << 'x' << (r + 1);
      if (a(r, c) != 1) os << '^' << a(r, c);
    }
  }
  return os.str();
}

// ---------------------------------------------------------------- algebra

MonomialMap compose(const MonomialMap& f, const MonomialMap& g) {
  if (f.dimension() != g.dimension()) {
    throw Error(ErrorCode::dimension_mismatch, "compose: dimension mismatch");
  }
  return MonomialMap(g.log_matrix() * f.log_matrix());
}

bool maps_equal(const MonomialMap& f, const MonomialMap& g) {
  if (f.dimension() != g.dimension()) {
    throw Error(ErrorCode::dimension_mismatch, "maps_equal: dimension mismatch");
  }
  return f == g;
}

MonomialMap identity_map(std::size_t n) { return MonomialMap(IntMatrix::identity(n)); }

bool is_cremona(const MonomialMap& f) { return abs(det_exact(f.log_matrix())) == f.degree(); }

DifferenceIntegrality check_difference_integrality(const MonomialMap& f) {
  if (!is_cremona(f)) throw Error(ErrorCode::not_cremona, "map is not Cremona");
  const RatMatrix inv = inverse_rational(f.log_matrix());
  const std::size_t n = f.dimension();
  DifferenceIntegrality out{true, {}};
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      DifferenceWitness w{i, j, RatVector(n), true};
      for (std::size_t k = 0; k < n; ++k) {
        w.value[k] = inv(k, i) - inv(k, j);
        if (w.value[k].get_den() != 1) w.integral = false;
      }
      out.all_integral = out.all_integral && w.integral;
      out.witnesses.push_back(std::move(w));
    }
  return out;
}

IntMatrix permute(const IntMatrix& m, const Permutation& source, const Permutation& target) {
  if (source.size() != m.rows() || target.size() != m.cols()) {
    throw Error(ErrorCode::dimension_mismatch, "permute: permutation size mismatch");
  }
  IntMatrix out(m.rows(), m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) out(source(r), target(c)) = m(r, c);
  return out;
}

MonomialMap permute(const MonomialMap& f, const Permutation& source, const Permutation& target) {
  return MonomialMap(permute(f.log_matrix(), source, target));
}

MonomialMap permutation_map(const Permutation& source, const Permutation& target) {
  if (source.size() != target.size()) {
    throw Error(ErrorCode::dimension_mismatch, "permutation_map: size mismatch");
  }
  return MonomialMap(permute(IntMatrix::identity(source.size()), source, target));
}

}  // namespace cremona
