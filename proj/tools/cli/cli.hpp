#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace cr::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitPrecondition = 2;
inline constexpr int kExitInvariant = 3;

// Data goes to out, diagnostics (one line each) to err. Returns the exit code.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

// argv[0] is supplied.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace cr::cli
