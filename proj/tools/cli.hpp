#pragma once

#include <ostream>

namespace pinched {

enum ExitCode { kOk = 0, kVerifyFailed = 1, kUsage = 2, kResource = 3 };

/// Entry point of the command-line tool; writes results to `out` and
/// diagnostics to `err`.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace pinched
