#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace binsum {

/// Exit codes: 0 all cases certified or exactly equal, 1 some CertainFalse,
/// 2 some Undecided (and no CertainFalse), 3 usage or input error.
inline constexpr int kExitUsage = 3;

/// Command-line entry point. argv[0] is the program name.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

/// Convenience overload; `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace binsum
