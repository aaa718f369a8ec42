#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace lpa::cli {

// Exit codes. classify maps each verdict to its own code.
inline constexpr int kExitOk = 0;
inline constexpr int kExitBadInput = 2;
inline constexpr int kExitNotIsomorphic = 3;
inline constexpr int kExitUnknown = 4;
inline constexpr int kExitNotApplicable = 5;

/// Largest `table --max` accepted without --allow-large.
inline constexpr long kTableMaxDefaultCap = 500;

/// Runs one subcommand. args excludes the program name. Errors go to err as
/// a single line starting with "error: ".
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace lpa::cli
