#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace rainbow::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
/// Legitimate negative outcome: no rainbow matching, algorithm halted,
/// condition fails, counterexamples found.
inline constexpr int kExitNegative = 2;
/// Input or precondition violation.
inline constexpr int kExitPrecondition = 3;
/// A guaranteed step failed; the instance is dumped to stderr.
inline constexpr int kExitTheoremViolation = 4;

/// Runs the command line `args` (args[0] is the program name). Instances
/// named "-" are read from `in`.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err);

}  // namespace rainbow::cli
