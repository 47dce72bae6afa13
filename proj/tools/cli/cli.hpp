// cli.hpp -- the magicsq command line, runnable in-process

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace magicsq::cli {

/// Process exit codes. No other values are ever returned.
enum ExitCode : int {
    kExitOk = 0,
    kExitPropertyFailed = 1,
    kExitUsage = 2,
    kExitSearchExhausted = 3,
};

struct Streams
{
    std::istream& in;
    std::ostream& out;
    std::ostream& err;
    /// Colorize PASS/FAIL in text reports.
    bool color = false;
};

/// Runs one invocation. `args` excludes the program name.
int run(const std::vector<std::string>& args, Streams& io);

}  // namespace magicsq::cli
