#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace taxdist::cli {

inline constexpr int exit_ok = 0;
inline constexpr int exit_domain_error = 1;
inline constexpr int exit_usage = 2;

/// Runs the command line in `args` (args[0] is the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace taxdist::cli
