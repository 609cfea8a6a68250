#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace setcalc::io {

/// Process exit codes of the command-line front end.
enum ExitCode : int {
    kExitOk = 0,
    kExitInternal = 1,
    kExitBadArguments = 2,
    kExitUnsupported = 3,
};

/// Run one command line (without the program name). Results go to `out`
/// (or the --out file), diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Install the default tolerance from SETCALC_TOLERANCE_ATOL when set.
/// Returns false after reporting to `err` when the value is not a
/// nonnegative finite number.
bool apply_environment(std::ostream& err);

}  // namespace setcalc::io
