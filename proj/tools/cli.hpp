#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace hconvex::cli {

/// Runs one command line (without the program name). Returns the process
/// exit code: 0 yes / within bound, 1 no / bound violated, 2 error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hconvex::cli
