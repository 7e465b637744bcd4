#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace cremona::cli {

/// Runs one command line (without the program name). Results go to `out`,
/// failures to `err` as {"error": code, "message": text}. Returns the exit status.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace cremona::cli
