#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace cremona {

enum class ErrorCode {
  not_square,
  dimension_mismatch,
  singular,
  not_diagonal,
  parse_error,
  unequal_degrees,
  invalid_map,
  not_cremona,
  no_shape_match,
  solution_violates_a,
  bound_exhausted,
  oracle_contradiction,
  internal,
};

constexpr std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::not_square: return "not_square";
    case ErrorCode::dimension_mismatch: return "dimension_mismatch";
    case ErrorCode::singular: return "singular";
    case ErrorCode::not_diagonal: return "not_diagonal";
    case ErrorCode::parse_error: return "parse_error";
    case ErrorCode::unequal_degrees: return "unequal_degrees";
    case ErrorCode::invalid_map: return "invalid_map";
    case ErrorCode::not_cremona: return "not_cremona";
    case ErrorCode::no_shape_match: return "no_shape_match";
    case ErrorCode::solution_violates_a: return "solution_violates_a";
    case ErrorCode::bound_exhausted: return "bound_exhausted";
    case ErrorCode::oracle_contradiction: return "oracle_contradiction";
    case ErrorCode::internal: return "internal";
  }
  return "unknown";
}

/// Every failure raised by the library carries a stable code; the CLI prints it.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace cremona
