#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace polysparse::cli {

// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kMismatch = 1;     // formula and oracle disagree
inline constexpr int kBadArguments = 2;
inline constexpr int kInvalidMesh = 3;
inline constexpr int kWriteFailure = 4;

// Runs one command; `args` excludes the program name. Data goes to `out` (or --out),
// diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace polysparse::cli
