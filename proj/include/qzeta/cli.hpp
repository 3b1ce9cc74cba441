#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace qzeta {

enum ExitCode : int {
    exit_ok = 0,
    exit_verification_failed = 1,
    exit_usage = 2,
    exit_precision = 3,
};

// Runs the qzk command line (args excludes the program name). Output goes to
// `out` unless --output names a file; diagnostics go to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace qzeta
