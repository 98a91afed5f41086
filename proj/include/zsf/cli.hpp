#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "zsf/types.hpp"

namespace zsf::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitDiscrepancy = 1;
inline constexpr int kExitUsage = 2;

/// Runs one command line (args[0] is the program name). The serialized record
/// goes to `out`, diagnostics to `err`. Returns the process exit status.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// "a/b", an integer, or a decimal literal such as "0.3", converted exactly.
/// Throws std::invalid_argument on anything else.
Rational parse_rational(const std::string& text);

/// Comma-separated doubles, e.g. "9.2,18.4". Empty text gives an empty list.
std::vector<double> parse_double_list(const std::string& text);

}  // namespace zsf::cli
