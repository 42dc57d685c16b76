#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace digitop::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFail = 1;
inline constexpr int kExitInputError = 2;

/// Runs the digitop command line.  args excludes the program name.  Reports
/// go to out, diagnostics to err.  Returns 0 on success or PASS, 1 on a FAIL
/// (or, with --expect-pass, a failed condition or a found counterexample),
/// and 2 on any input error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace digitop::cli
