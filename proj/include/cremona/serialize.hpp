#pragma once

// JSON schemas:
//   map       {"n": int, "degree": int, "log_matrix": [[row], ...]}   (columns are monomials)
//   solution  {"B": [[row], ...], "gamma": [...], "inverse_degree": int}
//   word      [{"kind": "S"} | {"kind": "H", "power": k} | {"kind": "P", "source": "132", "target": "213"}, ...]
// Integers that do not fit in 64 bits are written as decimal strings; readers
// accept either form.

#include "json.hpp"

#include "cremona/inverse.hpp"
#include "cremona/monomap.hpp"
#include "cremona/plane.hpp"

namespace cremona {

using Json = nlohmann::json;

Json integer_to_json(const Integer& v);
Integer integer_from_json(const Json& j);
Json vector_to_json(const IntVector& v);
Json matrix_to_json(const IntMatrix& m);
IntMatrix matrix_from_json(const Json& j);

Json map_to_json(const MonomialMap& f);
/// Validates n and degree against the matrix.
MonomialMap map_from_json(const Json& j);

Json solution_to_json(const InverseSolution& s);
InverseSolution solution_from_json(const Json& j);

Json report_to_json(const VerificationReport& r);

Json word_to_json(const plane::GeneratorWord& w);
plane::GeneratorWord word_from_json(const Json& j);

Json plane_case_to_json(const plane::PlaneCase& c);

}  // namespace cremona
