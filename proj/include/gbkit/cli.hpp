#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace gbkit {

// Exit statuses of the command-line tool.
inline constexpr int kExitOk = 0;
inline constexpr int kExitMath = 1;
inline constexpr int kExitUsage = 2;

// Runs one command; args excludes the program name. A system file argument of
// "-" reads from in.
int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace gbkit
