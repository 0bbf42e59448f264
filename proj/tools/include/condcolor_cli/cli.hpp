#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace condcolor::cli {

enum ExitCode : int {
    exit_yes = 0,
    exit_no = 1,     // a correct negative answer, or a failed certification
    exit_usage = 2,  // bad flags, unreadable or malformed input
};

struct CommandOutcome {
    int exit_code = exit_usage;
    std::vector<std::string> artifacts;  // files written, in write order
};

/// Runs one command line (args excludes the program name). Human-readable
/// summaries go to out, diagnostics to err.
CommandOutcome run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace condcolor::cli
