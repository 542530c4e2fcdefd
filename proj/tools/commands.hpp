#pragma once

#include <ostream>

namespace osprings::cli {

enum ExitCode { kOk = 0, kVerifyFailed = 1, kBadInput = 2, kCrossCheck = 3 };

// Parses argv and runs one subcommand, writing results to out and diagnostics to err.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace osprings::cli
