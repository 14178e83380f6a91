#pragma once

#include <iosfwd>

namespace cleanup::cli {

enum ExitCode : int {
    exit_ok = 0,
    exit_verify_failed = 1,
    exit_usage = 2,
    exit_no_convergence = 3,
};

/// Parses the command line and runs one subcommand. Regular output goes to
/// `out` unless --out names a file; diagnostics go to `err`.
int run_cli(int argc, char const* const* argv, std::ostream& out, std::ostream& err);

}  // namespace cleanup::cli
