#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace germ::cli {

inline constexpr const char* kToolVersion = "0.1.0";

/// Runs the command line `args` (args[0] is the program name).
/// Exit codes: 0 ok, 1 usage error, 2 domain error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace germ::cli
