#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace cobord::cli {

/// Process exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitParse = 2;
inline constexpr int kExitDomain = 3;

/// Truncation order used when --order is absent: $COBORD_DEFAULT_ORDER if
/// set, otherwise 8.
int default_order();

/// Runs one CLI invocation. `args` excludes the program name. Results go to
/// `out` (or the --out file), diagnostics to `err`.
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace cobord::cli
