#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace zeno::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitConfig = 2;
inline constexpr int kExitDomain = 3;

/// Runs the command line `args` (args[0] is the program name). Reports and
/// CSV go to `out` unless redirected with --out; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace zeno::cli
