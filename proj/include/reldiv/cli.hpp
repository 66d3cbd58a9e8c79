#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace reldiv {

struct CliEnvironment {
  bool stdin_is_terminal = false;
  bool color = false;
};

/// Runs one command line (without the program name). Returns the exit code:
/// 0 success, 1 semantic failure, 2 usage error.
int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
            std::ostream& err, const CliEnvironment& env);

}  // namespace reldiv
