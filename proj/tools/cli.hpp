#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace fracpoly::cli {

enum ExitCode : int {
    exit_ok = 0,
    exit_check_failed = 1,
    exit_usage = 2,
    exit_resource = 3,
};

// Runs `fracpoly <subcommand> ...`; args exclude the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace fracpoly::cli
