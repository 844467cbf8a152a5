#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace subdiff::cli {

/// Exit statuses of run().
enum ExitCode : int {
    kOk = 0,
    kUsage = 1,       ///< unknown flag, missing option value, bad syntax
    kValidation = 2,  ///< parameters outside their domain
    kNumerical = 3    ///< a numerical procedure missed its tolerance
};

/// Runs one command. `args` excludes the program name. The report goes to
/// `out` (or to --out), diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace subdiff::cli
