#pragma once

// Plane (n = 3) Cremona monomial maps: the Steiner involution S, the
// hyperbolism H and its powers, support classification, decomposition into
// generator words and closed-form inverses.

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "cremona/inverse.hpp"
#include "cremona/monomap.hpp"

namespace cremona::plane {

/// S = (x1*x2, x1*x3, x2*x3).
MonomialMap steiner();
/// H^k = (x1^{k+1}, x1^k*x2, x2^k*x3), a map of degree k + 1; k >= 1.
MonomialMap hyperbolism_power(unsigned long k);
/// G_d = (x1*x2^{d-1}, x2^d, x1^{d-1}*x3), the inverse of H^{d-1}.
MonomialMap hyperbolism_inverse(unsigned long d);

struct BasicGenerators {
  MonomialMap steiner;
  MonomialMap hyperbolism_power;    // H^{d-1}
  MonomialMap hyperbolism_inverse;  // G_d
};

/// Throws dimension_mismatch for d < 2.
BasicGenerators basic_generators(unsigned long d);

class GeneratorToken {
 public:
  enum class Kind { Steiner, HyperbolismPower, Perm };

  static GeneratorToken steiner() { return GeneratorToken(Kind::Steiner, 0, Permutation::identity(3), Permutation::identity(3)); }
  static GeneratorToken hyperbolism(unsigned long power);
  static GeneratorToken perm(Permutation source, Permutation target);

  Kind kind() const noexcept { return kind_; }
  unsigned long power() const noexcept { return power_; }
  const Permutation& source() const noexcept { return source_; }
  const Permutation& target() const noexcept { return target_; }

  /// The map this token denotes; Perm(s|t) is permutation_map(s, t).
  MonomialMap to_map() const;
  std::string to_string() const;

  friend bool operator==(const GeneratorToken&, const GeneratorToken&) = default;

 private:
  GeneratorToken(Kind kind, unsigned long power, Permutation source, Permutation target)
      : kind_(kind), power_(power), source_(std::move(source)), target_(std::move(target)) {}

  Kind kind_;
  unsigned long power_;
  Permutation source_;
  Permutation target_;
};

/// Tokens are composed right to left: the rightmost token is applied first.
struct GeneratorWord {
  std::vector<GeneratorToken> tokens;

  friend bool operator==(const GeneratorWord&, const GeneratorWord&) = default;
};

/// Throws parse_error on an empty word.
MonomialMap evaluate_word(const GeneratorWord& w);

/// "S.H^2.P(132|213)"; a bare "H" is H^1.
std::string format_word(const GeneratorWord& w);
GeneratorWord parse_word(std::string_view text);

/// Fuses adjacent Perm tokens and drops identity permutations.
GeneratorWord simplify(const GeneratorWord& w);

enum class CaseTag { I, II, IIIa, IIIb, IIIc, IIId, IIIe };
std::string_view to_string(CaseTag tag);

/// A map brought to the support pattern
///   (x1^a1 x2^a2, x2^b2 x3^b3, x1^c1 x3^c3)
/// by permute(F, source, target).
struct PlaneCase {
  CaseTag tag;
  Permutation source;
  Permutation target;
  Integer degree;
  Integer a1, a2, b2, b3, c1, c3;
};

/// Searches the 36 (source, target) pairs in lexicographic order and returns
/// the first one exhibiting the pattern above. Throws not_cremona,
/// dimension_mismatch (n != 3) or no_shape_match.
PlaneCase classify(const MonomialMap& f);

struct DecomposeStats {
  std::size_t degree_steps = 0;     // Case II reductions taken
  std::size_t fallback_steps = 0;   // reductions found outside the two proof shapes
  std::vector<std::string> cases;   // e.g. "I", "II(a)", "II(b)", "terminal"
};

/// A word w with maps_equal(evaluate_word(w), f). Throws not_cremona,
/// dimension_mismatch for n != 3, internal if the degree fails to drop.
GeneratorWord decompose(const MonomialMap& f, DecomposeStats* stats = nullptr);

/// Inverse read off the closed formulas for the two normal shapes
///   left  [[a1,b1,0],[a2,b2,0],[a3,0,d]]   and
///   right [[a1,0,c1],[a2,b2,0],[0,b3,c3]]
/// with det = +d. Throws no_shape_match when no permutation reaches them.
InverseSolution invert3_closed_form(const MonomialMap& f);

/// The word [Perm, T, Perm] writing f as a relabelled S, H^{d-1} or
/// permutation, if one exists.
bool match_generator(const MonomialMap& f, GeneratorWord& out);

}  // namespace cremona::plane
