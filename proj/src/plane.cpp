#include "cremona/plane.hpp"

#include <cctype>
#include <sstream>

namespace cremona::plane {

namespace {

constexpr std::size_t kPlane = 3;

void require_plane_cremona(const MonomialMap& f, const char* what) {
  if (f.dimension() != kPlane) {
    throw Error(ErrorCode::dimension_mismatch, std::string(what) + ": plane maps only (n = 3)");
  }
  if (!is_cremona(f)) throw Error(ErrorCode::not_cremona, std::string(what) + ": map is not Cremona");
}

const std::vector<Permutation>& plane_perms() {
  static const std::vector<Permutation> perms = Permutation::all(kPlane);
  return perms;
}

IntMatrix columns3(const IntVector& c0, const IntVector& c1, const IntVector& c2) {
  return IntMatrix::from_columns({c0, c1, c2});
}

bool left_shape(const IntMatrix& n, const Integer& d) {
  return n(0, 2) == 0 && n(1, 2) == 0 && n(2, 1) == 0 && n(2, 2) == d;
}

bool right_shape(const IntMatrix& n) { return n(0, 1) == 0 && n(1, 2) == 0 && n(2, 0) == 0; }

// permute(F, s, t) = Pt . F . Ps; these undo the two sides.
GeneratorToken undo_target(const Permutation& t) {
  return GeneratorToken::perm(Permutation::identity(t.size()), t.inverse());
}
GeneratorToken undo_source(const Permutation& s) {
  return GeneratorToken::perm(s.inverse(), Permutation::identity(s.size()));
}

Permutation permutation_of(const IntMatrix& m) {
  std::vector<std::size_t> images(m.cols());
  for (std::size_t c = 0; c < m.cols(); ++c)
    for (std::size_t r = 0; r < m.rows(); ++r)
      if (m(r, c) == 1) images[c] = r;
  return Permutation(std::move(images));
}

}  // namespace

// ---------------------------------------------------------------- generators

MonomialMap steiner() { return MonomialMap(IntMatrix{{1, 1, 0}, {1, 0, 1}, {0, 1, 1}}); }

MonomialMap hyperbolism_power(unsigned long k) {
  if (k < 1) throw Error(ErrorCode::dimension_mismatch, "hyperbolism power must be >= 1");
  const Integer kk = k;
  return MonomialMap(columns3({kk + 1, 0, 0}, {kk, 1, 0}, {0, kk, 1}));
}

MonomialMap hyperbolism_inverse(unsigned long d) {
  if (d < 2) throw Error(ErrorCode::dimension_mismatch, "G_d needs d >= 2");
  const Integer dd = d;
  return MonomialMap(columns3({1, dd - 1, 0}, {0, dd, 0}, {dd - 1, 0, 1}));
}

BasicGenerators basic_generators(unsigned long d) {
  if (d < 2) throw Error(ErrorCode::dimension_mismatch, "basic_generators: d must be >= 2");
  return BasicGenerators{steiner(), hyperbolism_power(d - 1), hyperbolism_inverse(d)};
}

// ---------------------------------------------------------------- tokens

GeneratorToken GeneratorToken::hyperbolism(unsigned long power) {
  if (power < 1) throw Error(ErrorCode::parse_error, "hyperbolism power must be >= 1");
  return GeneratorToken(Kind::HyperbolismPower, power, Permutation::identity(kPlane),
                        Permutation::identity(kPlane));
}

GeneratorToken GeneratorToken::perm(Permutation source, Permutation target) {
  if (source.size() != kPlane || target.size() != kPlane) {
    throw Error(ErrorCode::dimension_mismatch, "plane permutations act on 3 letters");
  }
  return GeneratorToken(Kind::Perm, 0, std::move(source), std::move(target));
}

MonomialMap GeneratorToken::to_map() const {
  switch (kind_) {
    case Kind::Steiner: return plane::steiner();
    case Kind::HyperbolismPower: return hyperbolism_power(power_);
    case Kind::Perm: return permutation_map(source_, target_);
  }
  throw Error(ErrorCode::internal, "unknown token kind");
}

std::string GeneratorToken::to_string() const {
  switch (kind_) {
    case Kind::Steiner: return "S";
    case Kind::HyperbolismPower: return power_ == 1 ? "H" : "H^" + std::to_string(power_);
    case Kind::Perm: return "P(" + source_.to_string() + "|" + target_.to_string() + ")";
  }
  return "?";
}

MonomialMap evaluate_word(const GeneratorWord& w) {
  if (w.tokens.empty()) throw Error(ErrorCode::parse_error, "evaluate_word: empty word");
  MonomialMap acc = w.tokens.back().to_map();
  for (auto it = w.tokens.rbegin() + 1; it != w.tokens.rend(); ++it) acc = compose(it->to_map(), acc);
  return acc;
}

std::string format_word(const GeneratorWord& w) {
  std::string out;
  for (std::size_t i = 0; i < w.tokens.size(); ++i) {
    if (i) out += '.';
    out += w.tokens[i].to_string();
  }
  return out;
}

GeneratorWord parse_word(std::string_view text) {
  std::string s;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
  GeneratorWord w;
  if (s.empty()) throw Error(ErrorCode::parse_error, "empty word");
  std::size_t pos = 0;
  auto fail = [&](const std::string& what) -> void {
    throw Error(ErrorCode::parse_error, "word syntax error at " + std::to_string(pos) + ": " + what);
  };
  while (true) {
    if (pos >= s.size()) fail("expected token");
    if (s[pos] == 'S') {
      ++pos;
      w.tokens.push_back(GeneratorToken::steiner());
    } else if (s[pos] == 'H') {
      ++pos;
      unsigned long power = 1;
      if (pos < s.size() && s[pos] == '^') {
        ++pos;
        const std::size_t start = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (start == pos || pos - start > 9) fail("bad exponent");
        power = std::stoul(s.substr(start, pos - start));
      }
      w.tokens.push_back(GeneratorToken::hyperbolism(power));
    } else if (s[pos] == 'P') {
      ++pos;
      if (pos >= s.size() || s[pos] != '(') fail("expected '('");
      const std::size_t bar = s.find('|', pos);
      const std::size_t close = s.find(')', pos);
      if (bar == std::string::npos || close == std::string::npos || bar > close) fail("expected P(s|t)");
      w.tokens.push_back(GeneratorToken::perm(Permutation::parse(s.substr(pos + 1, bar - pos - 1)),
                                              Permutation::parse(s.substr(bar + 1, close - bar - 1))));
      pos = close + 1;
    } else {
      fail("unknown token");
    }
    if (pos == s.size()) break;
    if (s[pos] != '.') fail("expected '.'");
    ++pos;
  }
  return w;
}

GeneratorWord simplify(const GeneratorWord& w) {
  GeneratorWord out;
  for (const auto& tok : w.tokens) {
    if (tok.kind() == GeneratorToken::Kind::Perm && !out.tokens.empty() &&
        out.tokens.back().kind() == GeneratorToken::Kind::Perm) {
      const MonomialMap fused = compose(out.tokens.back().to_map(), tok.to_map());
      out.tokens.back() =
          GeneratorToken::perm(permutation_of(fused.log_matrix()), Permutation::identity(kPlane));
    } else {
      out.tokens.push_back(tok);
    }
  }
  std::erase_if(out.tokens, [](const GeneratorToken& t) {
    return t.kind() == GeneratorToken::Kind::Perm &&
           permutation_map(t.source(), t.target()) == identity_map(kPlane);
  });
  if (out.tokens.empty()) {
    out.tokens.push_back(
        GeneratorToken::perm(Permutation::identity(kPlane), Permutation::identity(kPlane)));
  }
  return out;
}

// ---------------------------------------------------------------- classify

std::string_view to_string(CaseTag tag) {
  switch (tag) {
    case CaseTag::I: return "I";
    case CaseTag::II: return "II";
    case CaseTag::IIIa: return "IIIa";
    case CaseTag::IIIb: return "IIIb";
    case CaseTag::IIIc: return "IIIc";
    case CaseTag::IIId: return "IIId";
    case CaseTag::IIIe: return "IIIe";
  }
  return "?";
}

PlaneCase classify(const MonomialMap& f) {
  require_plane_cremona(f, "classify");
  for (const auto& s : plane_perms())
    for (const auto& t : plane_perms()) {
      const IntMatrix n = permute(f.log_matrix(), s, t);
      if (!right_shape(n)) continue;
      PlaneCase pc{CaseTag::IIIe, s, t, f.degree(), n(0, 0), n(1, 0), n(1, 1), n(2, 1), n(0, 2), n(2, 2)};
      if (pc.a2 == 0) pc.tag = CaseTag::I;
      else if (pc.a1 == 0) pc.tag = CaseTag::II;
      else if (pc.b2 == 0) pc.tag = CaseTag::IIIa;
      else if (pc.c3 == 0) pc.tag = CaseTag::IIIb;
      else if (pc.c1 == 0) pc.tag = CaseTag::IIIc;
      else if (pc.b3 == 0) pc.tag = CaseTag::IIId;
      return pc;
    }
  throw Error(ErrorCode::no_shape_match, "classify: support has no zero transversal");
}

// ---------------------------------------------------------------- decompose

bool match_generator(const MonomialMap& f, GeneratorWord& out) {
  if (f.dimension() != kPlane) return false;
  const IntMatrix& a = f.log_matrix();
  if (f.degree() == 1) {
    out.tokens = {GeneratorToken::perm(permutation_of(a), Permutation::identity(kPlane))};
    return true;
  }
  if (!f.degree().fits_ulong_p()) return false;
  std::vector<std::pair<GeneratorToken, MonomialMap>> candidates;
  const unsigned long d = f.degree().get_ui();
  candidates.emplace_back(GeneratorToken::hyperbolism(d - 1), hyperbolism_power(d - 1));
  if (d == 2) candidates.emplace_back(GeneratorToken::steiner(), steiner());
  for (const auto& [token, normal] : candidates)
    for (const auto& s : plane_perms())
      for (const auto& t : plane_perms()) {
        if (permute(a, s, t) != normal.log_matrix()) continue;
        out.tokens = {undo_target(t), token, undo_source(s)};
        return true;
      }
  return false;
}

GeneratorWord decompose(const MonomialMap& f, DecomposeStats* stats) {
  require_plane_cremona(f, "decompose");
  DecomposeStats local;
  DecomposeStats& st = stats ? *stats : local;
  st = DecomposeStats{};

  const MonomialMap s_map = steiner();
  const MonomialMap h_map = hyperbolism_power(1);
  const MonomialMap g2_map = hyperbolism_inverse(2);
  GeneratorWord g2_word;
  if (!match_generator(g2_map, g2_word)) throw Error(ErrorCode::internal, "G_2 is not a relabelled H");

  std::vector<GeneratorToken> left;
  std::vector<GeneratorToken> right;  // applied before the current map
  MonomialMap cur = f;
  const Integer bound = f.degree();

  auto descend = [&](const Permutation& s, const Permutation& t,
                     const std::vector<GeneratorToken>& inverse_tokens, MonomialMap next) {
    left.push_back(undo_target(t));
    left.insert(left.end(), inverse_tokens.begin(), inverse_tokens.end());
    right.insert(right.begin(), undo_source(s));
    cur = std::move(next);
  };

  while (true) {
    GeneratorWord terminal;
    if (match_generator(cur, terminal)) {
      left.insert(left.end(), terminal.tokens.begin(), terminal.tokens.end());
      st.cases.emplace_back("terminal");
      break;
    }
    try {
      classify(cur);
      throw Error(ErrorCode::internal,
                  "decompose: zero-transversal support that is neither S nor H^{d-1}: " +
                      format_map(cur));
    } catch (const Error& e) {
      if (e.code() != ErrorCode::no_shape_match) throw;
    }
    if (Integer(st.degree_steps) >= bound) {
      throw Error(ErrorCode::internal, "decompose: degree failed to decrease within bound");
    }

    bool advanced = false;
    bool finished = false;
    for (const auto& s : plane_perms()) {
      for (const auto& t : plane_perms()) {
        const MonomialMap n = permute(cur, s, t);
        if (!left_shape(n.log_matrix(), n.degree())) continue;
        const Integer& a1 = n.log_matrix()(0, 0);
        const Integer& b1 = n.log_matrix()(0, 1);
        if (a1 >= b1) {
          // S N is a relabelled S or H power, and N = S (S N).
          GeneratorWord tail;
          if (!match_generator(compose(s_map, n), tail)) continue;
          descend(s, t, {GeneratorToken::steiner()}, compose(s_map, n));
          left.insert(left.end(), tail.tokens.begin(), tail.tokens.end());
          st.cases.emplace_back("I");
          finished = true;
        } else {
          MonomialMap next = compose(h_map, n);
          if (next.degree() >= n.degree()) continue;
          st.cases.emplace_back(det_exact(n.log_matrix()) == n.degree() ? "II(a)" : "II(b)");
          descend(s, t, g2_word.tokens, std::move(next));
          ++st.degree_steps;
          advanced = true;
        }
        break;
      }
      if (advanced || finished) break;
    }
    if (finished) break;
    if (advanced) continue;

    // Outside the two proof shapes: any relabelling and generator that
    // lowers the degree will do.
    const std::vector<std::pair<const MonomialMap*, std::vector<GeneratorToken>>> moves = {
        {&s_map, {GeneratorToken::steiner()}},
        {&h_map, g2_word.tokens},
        {&g2_map, {GeneratorToken::hyperbolism(1)}},
    };
    for (const auto& s : plane_perms()) {
      for (const auto& t : plane_perms()) {
        const MonomialMap n = permute(cur, s, t);
        for (const auto& [gen, inverse_tokens] : moves) {
          MonomialMap next = compose(*gen, n);
          if (next.degree() >= n.degree()) continue;
          descend(s, t, inverse_tokens, std::move(next));
          ++st.degree_steps;
          ++st.fallback_steps;
          st.cases.emplace_back("fallback");
          advanced = true;
          break;
        }
        if (advanced) break;
      }
      if (advanced) break;
    }
    if (!advanced) {
      throw Error(ErrorCode::internal, "decompose: no degree-lowering step for " + format_map(cur));
    }
  }

  GeneratorWord w;
  w.tokens = std::move(left);
  w.tokens.insert(w.tokens.end(), right.begin(), right.end());
  return simplify(w);
}

// ---------------------------------------------------------------- closed form

InverseSolution invert3_closed_form(const MonomialMap& f) {
  require_plane_cremona(f, "invert3_closed_form");
  const Integer& d = f.degree();
  for (const auto& s : plane_perms())
    for (const auto& t : plane_perms()) {
      const IntMatrix n = permute(f.log_matrix(), s, t);
      if (det_exact(n) != d) continue;
      IntMatrix b_n(3, 3);
      IntVector gamma_n(3);
      if (left_shape(n, d)) {
        const Integer &a1 = n(0, 0), &a2 = n(1, 0), &a3 = n(2, 0), &b1 = n(0, 1), &b2 = n(1, 1);
        const Integer last = a3 * b2 + 1;
        if (last % d != 0) throw Error(ErrorCode::internal, "closed form: (a3 b2 + 1)/d not integral");
        b_n = IntMatrix{{d, 0, b1}, {0, a1 + a2, a2}, {0, a3, last / d}};
        gamma_n = {d * a1 - 1, d * a2, d * a3};
      } else if (right_shape(n)) {
        const Integer &a1 = n(0, 0), &a2 = n(1, 0), &b2 = n(1, 1), &b3 = n(2, 1), &c1 = n(0, 2),
                      &c3 = n(2, 2);
        b_n = IntMatrix{{b2, c1, 0}, {0, c3, a2}, {b3, 0, a1}};
        gamma_n = {a1 * b2 + b3 * c1 - 1, a2 * b2, b3 * c3};
      } else {
        continue;
      }
      // n = R_s A C_t, so A (C_t B_n R_s) = R_s^T gamma_n 1^T + I.
      const IntMatrix r_s = permute(IntMatrix::identity(3), s, Permutation::identity(3));
      const IntMatrix c_t = permute(IntMatrix::identity(3), Permutation::identity(3), t);
      InverseSolution sol{c_t * b_n * r_s, r_s.transposed() * std::span<const Integer>(gamma_n),
                          0};
      sol.inverse_degree = sum(sol.B.column(0));
      if (!verify_solution(f.log_matrix(), sol).passed()) {
        throw Error(ErrorCode::internal, "closed form produced an invalid solution");
      }
      return sol;
    }
  throw Error(ErrorCode::no_shape_match,
              "invert3_closed_form: no relabelling reaches a closed-form shape with det = +d");
}

}  // namespace cremona::plane
