#pragma once

#include <string>

#include "cremona/exactmat.hpp"

namespace cremona {

/// Input file for an external Hilbert-basis tool: n^2, n^2 + n + 1, the
/// constraint rows of the cone system (single spaces), then the mode line "5".
std::string export_cone(const IntMatrix& A);

}  // namespace cremona
