#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace qlogic::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitRuntime = 1;
inline constexpr int kExitUsage = 2;

/// Runs one command line (without the program name). Normal output goes to
/// `out`, one-line diagnostics to `err`; the return value is the exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// printf("%.12g") with negative zero folded to zero.
std::string format_number(double x);

}  // namespace qlogic::cli
