#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace sweeprec {

enum ExitCode : int {
    kExitOk = 0,
    kExitMismatch = 1,
    kExitAssumption = 2,
    kExitMalformed = 3,
};

/// Runs one command line (without the program name). Results go to `out`,
/// diagnostics to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace sweeprec
