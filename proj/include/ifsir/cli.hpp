#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ifsir {

/// Exit codes of the command-line tool.
enum ExitCode : int { kExitOk = 0, kExitInputError = 1, kExitInternalError = 2 };

/// Runs the tool. `args` excludes the program name. Results go to `out`,
/// diagnostics to `err`. Output files are only written once every result is
/// computed.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace ifsir
