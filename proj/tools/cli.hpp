#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace indpro::cli {

// Dispatches one command line (without argv[0]). Reports go to out,
// diagnostics to err. Returns 0 when all checks passed, 1 when a check
// failed, 2 on input errors.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace indpro::cli
