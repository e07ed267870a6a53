#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace projnorm::cli {

/// Exit statuses shared by every subcommand.
enum ExitCode : int {
    kPass = 0,
    kChecksFailed = 1,
    kUsageError = 2,
    kIoError = 3,
};

/// Dispatch one invocation; args excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace projnorm::cli
