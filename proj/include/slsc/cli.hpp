#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace slsc {

// Exit statuses of the command-line tool.
enum ExitCode : int {
    exit_ok = 0,
    exit_false = 1,
    exit_usage = 2,
    exit_input = 3,
};

// Runs one command. `args` excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace slsc
