#include "cremona/cone.hpp"

#include <sstream>

#include "cremona/oracle.hpp"

namespace cremona {

std::string export_cone(const IntMatrix& A) {
  if (!A.is_square()) throw Error(ErrorCode::not_square, "export_cone: matrix is not square");
  if (A.rows() < 2) throw Error(ErrorCode::dimension_mismatch, "export_cone: n must be >= 2");
  const oracle::ConeSystem cone = oracle::build_cone_system(A);
  std::ostringstream os;
  os << cone.constraint_rows.rows() << '\n' << cone.num_vars << '\n';
  for (std::size_t r = 0; r < cone.constraint_rows.rows(); ++r) {
    for (std::size_t c = 0; c < cone.num_vars; ++c) {
      if (c) os << ' ';
      os << cone.constraint_rows(r, c);
    }
    os << '\n';
  }
  os << "5\n";
  return os.str();
}

}  // namespace cremona
