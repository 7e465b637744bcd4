// One line per acceptance criterion. Exit status is 0 only when the set of
// failing criteria equals the set named with --expect-fail (empty by default),
// so an unexpected pass is reported just like an unexpected failure.

#include <algorithm>
#include <chrono>
#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <tuple>

#include "cremona/cone.hpp"
#include "cremona/inverse.hpp"
#include "cremona/oracle.hpp"
#include "cremona/plane.hpp"
#include "support/corpus.hpp"

using namespace cremona;

namespace {

struct Outcome {
  bool passed;
  std::string detail;
};

Outcome pass(std::string detail = {}) { return {true, std::move(detail)}; }
Outcome fail(std::string detail) { return {false, std::move(detail)}; }

IntMatrix columns(std::initializer_list<IntVector> cols) {
  return IntMatrix::from_columns(std::vector<IntVector>(cols));
}

const IntMatrix kExample{{2, 1, 0}, {0, 1, 1}, {0, 0, 1}};

// The 200-map corpus shared by criteria 3, 5, 6, 9 and 10.
const std::vector<testing::PlaneSample>& corpus() {
  static const auto c = testing::plane_corpus(200, 2024);
  return c;
}

Outcome worked_example() {
  const InverseSolution sol = invert(MonomialMap(kExample));
  const IntMatrix expect = columns({{1, 1, 0}, {0, 2, 0}, {1, 0, 1}});
  if (sol.B != expect || sol.gamma != IntVector{2, 1, 0}) {
    return fail("B=" + to_string(sol.B) + " gamma=" + to_string(sol.gamma));
  }
  return pass("beta=(1,1,0),(0,2,0),(1,0,1) gamma=(2,1,0)");
}

IntMatrix triangular(long d) { return IntMatrix{{d, d - 1, 0}, {0, 1, d - 1}, {0, 0, 1}}; }

Outcome triangular_normalized() {
  for (long d = 2; d <= 5; ++d) {
    const InverseSolution sol = invert(MonomialMap(triangular(d)));
    if (sol.B != columns({{1, d - 1, 0}, {0, d, 0}, {d - 1, 0, 1}}) ||
        sol.gamma != IntVector{d * d - d, d - 1, 0}) {
      return fail("d=" + std::to_string(d) + ": B=" + to_string(sol.B) + " gamma=" + to_string(sol.gamma));
    }
  }
  return pass("d=2..5");
}

Outcome triangular_trace() {
  for (long d = 2; d <= 5; ++d) {
    AlgorithmTrace trace;
    invert(MonomialMap(triangular(d)), &trace);
    const IntMatrix stated = columns({{2, d, 0}, {1, d + 1, 0}, {d, 1, 1}});
    const IntVector stated_gamma{d * d + d - 1, d, 0};
    if (trace.pre_normalization_B != stated || trace.pre_normalization_gamma != stated_gamma) {
      return fail("d=" + std::to_string(d) + ": row-maxima construction gives pre-normalization B=" +
                  to_string(trace.pre_normalization_B) + " gamma=" +
                  to_string(trace.pre_normalization_gamma) + ", stated B=" + to_string(stated) +
                  " gamma=" + to_string(stated_gamma));
    }
  }
  return pass("d=2..5");
}

Outcome determinant_identities() {
  for (const auto& s : corpus()) {
    const InverseSolution sol = invert(s.map);
    const Integer det_b = abs(det_exact(sol.B));
    const Integer num = sum(sol.gamma) + 1;
    if (num % s.map.degree() != 0 || det_b != num / s.map.degree())
      return fail("|det B| != (|gamma|+1)/d for " + format_map(s.map));
    for (std::size_t c = 0; c < 3; ++c)
      if (sum(sol.B.column(c)) != det_b) return fail("column sum != |det B| for " + format_map(s.map));
  }
  return pass("200 maps");
}

Outcome uniqueness_oracle() {
  const auto maps = testing::low_degree_corpus(50, 4096, 4);
  std::size_t largest_bound = 0;
  for (const auto& f : maps) {
    const InverseSolution sol = invert(f);
    Integer top = 0;
    for (std::size_t r = 0; r < 3; ++r)
      for (std::size_t c = 0; c < 3; ++c) top = std::max(top, Integer(sol.B(r, c)));
    const long bound = top.get_si() + 1;
    largest_bound = std::max(largest_bound, static_cast<std::size_t>(bound));
    const auto res = oracle::brute_force_solutions(f.log_matrix(), bound);
    if (res.solutions.size() != 1) {
      return fail(std::to_string(res.solutions.size()) + " solutions for " + format_map(f));
    }
    if (res.solutions.front().B != sol.B || res.solutions.front().gamma != sol.gamma) {
      return fail("oracle solution differs from invert for " + format_map(f));
    }
  }
  return pass("50 maps, d<=4, largest bound " + std::to_string(largest_bound));
}

Outcome round_trip() {
  for (const auto& s : corpus()) {
    const MonomialMap g = invert(s.map).as_map();
    if (!maps_equal(compose(s.map, g), identity_map(3)) || !maps_equal(invert(g).as_map(), s.map))
      return fail("round trip broken for " + format_map(s.map));
  }
  return pass("200 maps");
}

Outcome delta_lift() {
  for (const auto& s : corpus()) {
    const InverseSolution via = invert_via_delta(s.map);
    if (via != invert(s.map)) return fail("delta lift differs for " + format_map(s.map));
    // invert_via_delta normalizes; rebuild the raw lift to see normalize had nothing to do.
    const DeltaLift lift = minimal_delta(s.map);
    const IntMatrix& A = s.map.log_matrix();
    const RatMatrix inv = inverse_rational(A);
    IntMatrix B(3, 3);
    IntVector gamma(3);
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t k = 0; k < 3; ++k) B(k, i) = Rational(lift.delta[k] + inv(k, i)).get_num();
    for (std::size_t r = 0; r < 3; ++r) {
      Rational g = 0;
      for (std::size_t j = 0; j < 3; ++j) g += lift.delta[j] * A(r, j);
      gamma[r] = g.get_num();
    }
    if (B != via.B || gamma != via.gamma) return fail("normalize changed the minimal lift of " + format_map(s.map));
  }
  return pass("200 maps");
}

Outcome generator_identities() {
  const Permutation swap13 = Permutation::parse("321");
  for (unsigned long d = 2; d <= 6; ++d) {
    const auto g = plane::basic_generators(d);
    MonomialMap power = plane::hyperbolism_power(1);
    for (unsigned long i = 2; i < d; ++i) power = compose(plane::hyperbolism_power(1), power);
    const Integer dd = d;
    const MonomialMap closed(columns({{dd, 0, 0}, {dd - 1, 1, 0}, {0, dd - 1, 1}}));
    if (power != closed || g.hyperbolism_power != closed) return fail("H^(d-1) closed form, d=" + std::to_string(d));
    if (compose(g.hyperbolism_power, g.hyperbolism_inverse) != identity_map(3))
      return fail("H^(d-1) G_d != id, d=" + std::to_string(d));
    if (permute(compose(g.steiner, g.hyperbolism_power), swap13, swap13) != compose(g.hyperbolism_power, g.steiner))
      return fail("conjugacy, d=" + std::to_string(d));
  }
  return pass("d=2..6");
}

Outcome decomposition() {
  const auto words = testing::plane_corpus(500, 500);
  std::size_t fallbacks = 0, longest = 0;
  for (const auto& s : words) {
    plane::DecomposeStats stats;
    const plane::GeneratorWord w = plane::decompose(s.map, &stats);
    if (!maps_equal(plane::evaluate_word(w), s.map)) return fail("recomposition failed for " + format_map(s.map));
    if (Integer(stats.degree_steps) > s.map.degree()) return fail("depth exceeds d for " + format_map(s.map));
    fallbacks += stats.fallback_steps;
    longest = std::max(longest, w.tokens.size());
  }
  return pass("500 words, longest " + std::to_string(longest) + " tokens, " + std::to_string(fallbacks) +
              " fallback steps");
}

Outcome plane_degrees() {
  std::size_t closed = 0;
  for (const auto& s : corpus()) {
    const InverseSolution sol = invert(s.map);
    if (sol.inverse_degree != s.map.degree()) return fail("degree changes for " + format_map(s.map));
    try {
      if (plane::invert3_closed_form(s.map) != sol) return fail("closed form differs for " + format_map(s.map));
      ++closed;
    } catch (const Error& e) {
      if (e.code() != ErrorCode::no_shape_match) throw;
    }
  }
  if (closed == 0) return fail("no corpus map matched a closed-form shape");
  return pass("200 maps, " + std::to_string(closed) + " in closed-form shapes");
}

Outcome difference_integrality() {
  for (const auto& s : corpus())
    if (!check_difference_integrality(s.map).all_integral) return fail(format_map(s.map));
  return pass("200 maps");
}

Outcome perturbation_expansion() {
  std::mt19937_64 rng(1000);
  std::uniform_int_distribution<int> entry(-5, 5);
  std::uniform_int_distribution<std::size_t> size(1, 5);
  for (int t = 0; t < 1000; ++t) {
    const std::size_t n = size(rng);
    IntMatrix g(n, n), d(n, n);
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c) g(r, c) = entry(rng);
    for (std::size_t i = 0; i < n; ++i) d(i, i) = entry(rng);
    if (det_diag_perturbation(g, d) != det_exact(g + d)) return fail("instance " + std::to_string(t));
  }
  return pass("1000 instances");
}

std::vector<std::string> tokens(const std::string& text) {
  std::istringstream in(text);
  std::vector<std::string> out;
  for (std::string t; in >> t;) out.push_back(t);
  return out;
}

Outcome export_and_tau1() {
  std::ifstream in(std::string(CREMONA_GOLDEN_DIR) + "/hyperbolism_cone.in");
  std::stringstream golden;
  golden << in.rdbuf();
  if (tokens(export_cone(kExample)) != tokens(golden.str())) return fail("export differs from listing");
  const auto s = oracle::cone_minimal_tau1(kExample, 3);
  if (s.point != IntVector{1, 1, 0, 0, 2, 0, 1, 0, 1, 2, 1, 0, 1}) return fail("tau=1 point " + to_string(s.point));
  return pass("9x13 export, tau=1 point (1,1,0,0,2,0,1,0,1,2,1,0,1)");
}

}  // namespace

int main(int argc, char** argv) {
  std::set<std::string> expected_failures;
  for (int i = 1; i < argc; ++i) {
    if (std::string(argv[i]) == "--expect-fail" && i + 1 < argc) expected_failures.insert(argv[++i]);
  }

  const std::vector<std::tuple<std::string, std::string, std::function<Outcome()>>> criteria = {
      {"1", "worked example d=2 reproduced", worked_example},
      {"2a", "triangular family: normalized inverse", triangular_normalized},
      {"2b", "triangular family: stated pre-normalization trace", triangular_trace},
      {"3", "|det B| = (|gamma|+1)/d = column sums", determinant_identities},
      {"4", "uniqueness against brute force", uniqueness_oracle},
      {"5", "round-trip group law", round_trip},
      {"6", "delta lift equals invert, already normalized", delta_lift},
      {"7", "hyperbolism powers, inverses, conjugacy", generator_identities},
      {"8", "decompose recomposes", decomposition},
      {"9", "plane inverse degree, closed form", plane_degrees},
      {"10", "difference integrality", difference_integrality},
      {"11", "principal-minor expansion", perturbation_expansion},
      {"12", "cone export golden file, tau=1 point", export_and_tau1},
  };

  std::set<std::string> failed;
  for (const auto& [id, title, fn] : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = fn();
    } catch (const std::exception& e) {
      o = fail(std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (!o.passed) failed.insert(id);
    std::cout << (o.passed ? "PASS " : "FAIL ") << id << " " << title << " — " << o.detail << " ["
              << std::fixed << std::setprecision(2) << secs << "s]" << std::endl;
  }

  std::cout << (criteria.size() - failed.size()) << "/" << criteria.size() << " criteria passed";
  if (!expected_failures.empty()) {
    std::cout << "; expected to fail:";
    for (const auto& id : expected_failures) std::cout << " " << id;
  }
  std::cout << std::endl;
  return failed == expected_failures ? 0 : 1;
}
