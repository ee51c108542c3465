#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace planechar::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitViolation = 1;
inline constexpr int kExitInvalidInput = 2;

// args excludes the program name. Output goes to `out` unless --out is given.
int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace planechar::cli
