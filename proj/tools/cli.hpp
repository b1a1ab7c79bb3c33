#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace affk::cli {

/// Exit codes of the command-line tool.
inline constexpr int kExitOk = 0;
/// Internal error, or a verify run with failing instances.
inline constexpr int kExitFailure = 1;
inline constexpr int kExitInvalidInput = 2;

/// Runs the tool on args (without the program name). Data goes to out,
/// diagnostics to err.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace affk::cli
