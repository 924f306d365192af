#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace szego::cli {

struct Streams {
    std::istream& in;
    std::ostream& out;
    std::ostream& err;
};

/// Exit codes: 0 success, 1 a checked inequality failed (or the solver missed
/// its residual target), 2 usage or input error.
inline constexpr int kExitOk = 0;
inline constexpr int kExitViolation = 1;
inline constexpr int kExitUsage = 2;

/// Runs one subcommand. `args` excludes the program name.
int run(const std::vector<std::string>& args, Streams io);

}  // namespace szego::cli
