#pragma once

#include <ostream>

namespace nld {

enum ExitCode : int {
    exit_success = 0,
    exit_usage = 1,
    exit_config = 2,
    exit_numerical = 3,
    exit_check_failed = 4,
};

/// Entry point of the `nldirac` command line tool:
///   run <config>         evolve and write snapshots + diagnostics.csv
///   stationary <config>  shoot a solitary-wave profile and report stationarity
///   exponents            print the conformal-degree table
///   check                run the built-in invariant suite
int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace nld
