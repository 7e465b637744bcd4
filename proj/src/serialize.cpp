#include "cremona/serialize.hpp"

namespace cremona {

namespace {

[[noreturn]] void schema_error(const std::string& what) {
  throw Error(ErrorCode::parse_error, "json: " + what);
}

const Json& field(const Json& j, const char* name) {
  if (!j.is_object() || !j.contains(name)) schema_error(std::string("missing field '") + name + "'");
  return j.at(name);
}

}  // namespace

Json integer_to_json(const Integer& v) {
  if (v.fits_slong_p()) return Json(v.get_si());
  return Json(v.get_str());
}

Integer integer_from_json(const Json& j) {
  if (j.is_number_integer()) return Integer(j.get<long>());
  if (j.is_number_unsigned()) return Integer(j.get<unsigned long>());
  if (j.is_string()) {
    Integer v;
    if (v.set_str(j.get<std::string>(), 10) != 0) schema_error("bad integer string");
    return v;
  }
  schema_error("expected an integer");
}

Json vector_to_json(const IntVector& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(integer_to_json(x));
  return out;
}

Json matrix_to_json(const IntMatrix& m) {
  Json out = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) out.push_back(vector_to_json(m.row(r)));
  return out;
}

IntMatrix matrix_from_json(const Json& j) {
  if (!j.is_array() || j.empty() || !j.front().is_array() || j.front().empty()) {
    schema_error("matrix must be a non-empty array of rows");
  }
  IntMatrix m(j.size(), j.front().size());
  for (std::size_t r = 0; r < j.size(); ++r) {
    if (!j[r].is_array() || j[r].size() != m.cols()) schema_error("ragged matrix");
    for (std::size_t c = 0; c < m.cols(); ++c) m(r, c) = integer_from_json(j[r][c]);
  }
  return m;
}

Json map_to_json(const MonomialMap& f) {
  return Json{{"n", f.dimension()},
              {"degree", integer_to_json(f.degree())},
              {"log_matrix", matrix_to_json(f.log_matrix())}};
}

MonomialMap map_from_json(const Json& j) {
  MonomialMap f(matrix_from_json(field(j, "log_matrix")));
  if (j.contains("n") && integer_from_json(j.at("n")) != Integer(f.dimension())) {
    schema_error("n disagrees with log_matrix");
  }
  if (j.contains("degree") && integer_from_json(j.at("degree")) != f.degree()) {
    schema_error("degree disagrees with the reduced log_matrix");
  }
  return f;
}

Json solution_to_json(const InverseSolution& s) {
  return Json{{"B", matrix_to_json(s.B)},
              {"gamma", vector_to_json(s.gamma)},
              {"inverse_degree", integer_to_json(s.inverse_degree)}};
}

InverseSolution solution_from_json(const Json& j) {
  InverseSolution s{matrix_from_json(field(j, "B")), {}, integer_from_json(field(j, "inverse_degree"))};
  const Json& gamma = field(j, "gamma");
  if (!gamma.is_array()) schema_error("gamma must be an array");
  for (const auto& g : gamma) s.gamma.push_back(integer_from_json(g));
  return s;
}

Json report_to_json(const VerificationReport& r) {
  Json checks = Json::array();
  for (const auto& c : r.checks) {
    checks.push_back(Json{{"name", c.name}, {"passed", c.passed}, {"offending", c.offending}});
  }
  return Json{{"passed", r.passed()}, {"checks", std::move(checks)}};
}

Json word_to_json(const plane::GeneratorWord& w) {
  using Kind = plane::GeneratorToken::Kind;
  Json out = Json::array();
  for (const auto& t : w.tokens) {
    switch (t.kind()) {
      case Kind::Steiner: out.push_back(Json{{"kind", "S"}}); break;
      case Kind::HyperbolismPower: out.push_back(Json{{"kind", "H"}, {"power", t.power()}}); break;
      case Kind::Perm:
        out.push_back(Json{{"kind", "P"},
                           {"source", t.source().to_string()},
                           {"target", t.target().to_string()}});
        break;
    }
  }
  return out;
}

plane::GeneratorWord word_from_json(const Json& j) {
  if (!j.is_array()) schema_error("word must be an array");
  plane::GeneratorWord w;
  for (const auto& t : j) {
    const std::string kind = field(t, "kind").get<std::string>();
    if (kind == "S") {
      w.tokens.push_back(plane::GeneratorToken::steiner());
    } else if (kind == "H") {
      w.tokens.push_back(plane::GeneratorToken::hyperbolism(
          t.contains("power") ? t.at("power").get<unsigned long>() : 1));
    } else if (kind == "P") {
      w.tokens.push_back(plane::GeneratorToken::perm(
          Permutation::parse(field(t, "source").get<std::string>()),
          Permutation::parse(field(t, "target").get<std::string>())));
    } else {
      schema_error("unknown token kind '" + kind + "'");
    }
  }
  return w;
}

Json plane_case_to_json(const plane::PlaneCase& c) {
  return Json{{"case", std::string(plane::to_string(c.tag))},
              {"source_perm", c.source.to_string()},
              {"target_perm", c.target.to_string()},
              {"degree", integer_to_json(c.degree)},
              {"a1", integer_to_json(c.a1)},
              {"a2", integer_to_json(c.a2)},
              {"b2", integer_to_json(c.b2)},
              {"b3", integer_to_json(c.b3)},
              {"c1", integer_to_json(c.c1)},
              {"c3", integer_to_json(c.c3)}};
}

}  // namespace cremona
