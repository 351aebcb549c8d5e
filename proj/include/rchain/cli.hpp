#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace rchain::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitMismatch = 1;
inline constexpr int kExitUsage = 2;

/// Runs one command. `args` excludes the program name.
/// Returns 0 on success, 1 when a verification mismatches, 2 on usage or
/// contract errors (message on err).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Parses "3", "1..3" or "1,2,5" (ranges may be mixed: "1..3,6").
std::vector<int> parse_int_list(const std::string& text);

} // namespace rchain::cli
