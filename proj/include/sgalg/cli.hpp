#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace sgalg {

inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitInvalidInput = 2;

/// Runs the command-line front end on `args` (args[0] is the program name).
/// Reports go to `out`, diagnostics to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace sgalg
