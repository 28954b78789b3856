#pragma once

#include <iosfwd>

namespace gstruve::cli {

/// Exit codes of the gstruve tool.
enum ExitCode : int {
    kPass = 0,
    kCertifiedFail = 1,
    kUsage = 2,
    kNumeric = 3,
};

/// Entry point shared by main() and the tests; reports go to `out`,
/// diagnostics to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace gstruve::cli
