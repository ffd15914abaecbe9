#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace dqeig::cli {

/// Runs the command line given without the program name. Returns the process exit
/// code: 0 converged or success, 2 degenerate-spectrum warning, 1 error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace dqeig::cli
