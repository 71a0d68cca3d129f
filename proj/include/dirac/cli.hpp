#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace dirac {

/// Runs one command line (without the program name). Reports go to `out`,
/// diagnostics to `err`. Returns the process exit code:
/// 0 pass/feasible, 1 fail, 2 infeasible by certificate, 3 usage or parse error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace dirac
