#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ruelle::cli {

/// Exit codes: 0 success, 2 input or validation error, 3 mathematical
/// precondition, 4 internal tolerance failure.
inline constexpr int kExitOk = 0;
inline constexpr int kExitValidation = 2;
inline constexpr int kExitMathDomain = 3;
inline constexpr int kExitTolerance = 4;

/// Runs one subcommand. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ruelle::cli
