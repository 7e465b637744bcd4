#include "doctest.h"

#include "cremona/inverse.hpp"
#include "cremona/plane.hpp"
#include "support/corpus.hpp"

using namespace cremona;
using namespace cremona::plane;

namespace {

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an Error");
  return ErrorCode::internal;
}

const Permutation kSwap13 = Permutation::parse("321");

}  // namespace

TEST_CASE("basic generators") {
  const auto g2 = basic_generators(2);
  CHECK(g2.hyperbolism_power == parse_map("x1^2, x1*x2, x2*x3"));
  CHECK(g2.hyperbolism_inverse == parse_map("x1*x2, x2^2, x1*x3"));
  CHECK(basic_generators(3).hyperbolism_power == parse_map("x1^3, x1^2*x2, x2^2*x3"));
  CHECK(compose(steiner(), steiner()) == identity_map(3));
  CHECK(code_of([] { basic_generators(1); }) == ErrorCode::dimension_mismatch);

  for (unsigned long d = 2; d <= 6; ++d) {
    CAPTURE(d);
    const auto g = basic_generators(d);
    MonomialMap power = hyperbolism_power(1);
    for (unsigned long i = 2; i < d; ++i) power = compose(hyperbolism_power(1), power);
    CHECK(power == g.hyperbolism_power);
    CHECK(g.hyperbolism_power.degree() == d);
    CHECK(compose(g.hyperbolism_power, g.hyperbolism_inverse) == identity_map(3));
    CHECK(compose(g.hyperbolism_inverse, g.hyperbolism_power) == identity_map(3));
    CHECK(invert(g.hyperbolism_power).as_map() == g.hyperbolism_inverse);
  }
}

TEST_CASE("S H^{d-1} and H^{d-1} S are conjugate by (1 3)") {
  for (unsigned long d = 2; d <= 6; ++d) {
    CAPTURE(d);
    const MonomialMap h = hyperbolism_power(d - 1);
    CHECK(permute(compose(steiner(), h), kSwap13, kSwap13) == compose(h, steiner()));
  }
  CHECK(format_map(compose(steiner(), hyperbolism_power(2))) == "x1^3, x1*x2*x3, x2^2*x3");
}

TEST_CASE("G_2 equals the computed inverse of H") {
  CHECK(hyperbolism_inverse(2) == invert(hyperbolism_power(1)).as_map());
}

TEST_CASE("evaluate_word") {
  GeneratorWord ss{{GeneratorToken::steiner(), GeneratorToken::steiner()}};
  CHECK(evaluate_word(ss) == identity_map(3));
  CHECK(evaluate_word(GeneratorWord{{GeneratorToken::hyperbolism(1)}}) == hyperbolism_power(1));
  GeneratorWord sh2{{GeneratorToken::steiner(), GeneratorToken::hyperbolism(2)}};
  CHECK(evaluate_word(sh2) == parse_map("x1^3, x1*x2*x3, x2^2*x3"));
  // Rightmost first: H then the relabelling.
  const Permutation s = Permutation::parse("231"), t = Permutation::parse("312");
  GeneratorWord ph{{GeneratorToken::perm(s, t), GeneratorToken::hyperbolism(1)}};
  CHECK(evaluate_word(ph) == compose(permutation_map(s, t), hyperbolism_power(1)));
  CHECK(code_of([] { evaluate_word(GeneratorWord{}); }) == ErrorCode::parse_error);
}

TEST_CASE("word text form") {
  const GeneratorWord w = parse_word("S.H^2.P(132|213)");
  REQUIRE(w.tokens.size() == 3);
  CHECK(w.tokens[0] == GeneratorToken::steiner());
  CHECK(w.tokens[1] == GeneratorToken::hyperbolism(2));
  CHECK(w.tokens[2] == GeneratorToken::perm(Permutation::parse("132"), Permutation::parse("213")));
  CHECK(format_word(w) == "S.H^2.P(132|213)");
  CHECK(parse_word("H").tokens.front() == GeneratorToken::hyperbolism(1));
  CHECK(code_of([] { parse_word("S..H"); }) == ErrorCode::parse_error);
  CHECK(code_of([] { parse_word("Q"); }) == ErrorCode::parse_error);
  CHECK(code_of([] { parse_word("P(12|123)"); }) == ErrorCode::dimension_mismatch);

  for (const auto& sample : testing::plane_corpus(50, 61)) {
    CHECK(parse_word(format_word(sample.word)) == sample.word);
    CHECK(evaluate_word(simplify(sample.word)) == sample.map);
  }
}

TEST_CASE("classify examples") {
  const PlaneCase st = classify(parse_map("x1*x2, x2*x3, x1*x3"));
  CHECK(st.tag == CaseTag::IIIe);
  CHECK(classify(steiner()).tag == CaseTag::IIIe);

  const PlaneCase one = classify(parse_map("x1^3, x2*x3^2, x1^2*x3"));
  CHECK(one.tag == CaseTag::I);
  CHECK(one.degree == 3);
  CHECK(one.a1 == 3);

  CHECK(code_of([] { classify(parse_map("x1^2, x2^2, x3^2")); }) == ErrorCode::not_cremona);
  CHECK(code_of([] { classify(identity_map(4)); }) == ErrorCode::dimension_mismatch);
}

TEST_CASE("classify: stored permutations reproduce the pattern, tags obey their inequalities") {
  std::size_t matched = 0;
  for (const auto& sample : testing::plane_corpus(300, 71)) {
    PlaneCase pc{CaseTag::I, Permutation::identity(3), Permutation::identity(3), 0, 0, 0, 0, 0, 0, 0};
    try {
      pc = classify(sample.map);
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::no_shape_match);
      continue;
    }
    ++matched;
    const IntMatrix n = permute(sample.map.log_matrix(), pc.source, pc.target);
    CHECK(n == IntMatrix{{pc.a1, 0, pc.c1}, {pc.a2, pc.b2, 0}, {0, pc.b3, pc.c3}});
    CHECK(pc.a1 + pc.a2 == pc.degree);
    CHECK(pc.b2 + pc.b3 == pc.degree);
    CHECK(pc.c1 + pc.c3 == pc.degree);
    // The determinant relation behind the case split.
    CHECK(pc.a1 * (pc.b2 * pc.c3 - 1) == pc.a2 * (1 - pc.c1 * pc.b3));
    switch (pc.tag) {
      case CaseTag::I:
        CHECK(pc.a2 == 0);
        CHECK(pc.a1 == pc.degree);
        CHECK(pc.b2 * pc.c3 == 1);
        break;
      case CaseTag::II:
        CHECK(pc.a1 == 0);
        CHECK(pc.c1 * pc.b3 == 1);
        break;
      default:
        CHECK(pc.a1 >= 1);
        CHECK(pc.a2 >= 1);
        break;
    }
    if (pc.tag == CaseTag::IIIe) CHECK(pc.degree == 2);
  }
  CHECK(matched > 0);
}

TEST_CASE("decompose examples") {
  CHECK(maps_equal(evaluate_word(decompose(steiner())), steiner()));
  CHECK(maps_equal(evaluate_word(decompose(hyperbolism_power(2))), hyperbolism_power(2)));
  const MonomialMap sh2 = parse_map("x1^3, x1*x2*x3, x2^2*x3");
  CHECK(maps_equal(evaluate_word(decompose(sh2)), sh2));
  CHECK(evaluate_word(decompose(identity_map(3))) == identity_map(3));
  CHECK(code_of([] { decompose(parse_map("x1^2, x2^2, x3^2")); }) == ErrorCode::not_cremona);
  CHECK(code_of([] { decompose(identity_map(4)); }) == ErrorCode::dimension_mismatch);
}

TEST_CASE("decompose recomposes random words") {
  std::size_t fallbacks = 0;
  for (const auto& sample : testing::plane_corpus(500, 97)) {
    CAPTURE(format_word(sample.word));
    DecomposeStats stats;
    const GeneratorWord w = decompose(sample.map, &stats);
    CHECK(maps_equal(evaluate_word(w), sample.map));
    CHECK(Integer(stats.degree_steps) <= sample.map.degree());
    fallbacks += stats.fallback_steps;
  }
  MESSAGE("fallback steps over 500 words: " << fallbacks);
}

TEST_CASE("invert3_closed_form examples") {
  SUBCASE("left shape") {
    const IntMatrix A{{1, 1, 0}, {0, 1, 0}, {1, 0, 2}};
    const InverseSolution sol = invert3_closed_form(MonomialMap(A));
    CHECK(sol.B == IntMatrix{{2, 0, 1}, {0, 1, 0}, {0, 1, 1}});
    CHECK(sol.gamma == IntVector{1, 0, 2});
    CHECK(sol == invert(MonomialMap(A)));
  }
  SUBCASE("right shape") {
    const IntMatrix A{{1, 0, 1}, {1, 1, 0}, {0, 1, 1}};
    const InverseSolution sol = invert3_closed_form(MonomialMap(A));
    CHECK(sol.B == IntMatrix{{1, 1, 0}, {0, 1, 1}, {1, 0, 1}});
    CHECK(sol.gamma == IntVector{1, 1, 1});
    CHECK(sol == invert(MonomialMap(A)));
  }
}

TEST_CASE("closed form agrees with invert; inverse degree equals degree") {
  std::size_t matched = 0;
  for (const auto& sample : testing::plane_corpus(300, 83)) {
    const InverseSolution sol = invert(sample.map);
    CHECK(sol.inverse_degree == sample.map.degree());
    try {
      const InverseSolution closed = invert3_closed_form(sample.map);
      CHECK(closed == sol);
      CHECK(closed.inverse_degree == sample.map.degree());
      ++matched;
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::no_shape_match);
    }
  }
  CHECK(matched > 0);
}
