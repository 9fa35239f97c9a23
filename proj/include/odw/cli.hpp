#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace odw {

/**
 * The command-line front end.  `args` excludes the program name.  Returns
 * the process exit code: 0 for success and passing suites, 1 for failing
 * suites (and substitution domain errors), 2 for flag or term parse errors
 * (term errors come with a caret diagnostic on stderr).
 */
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace odw
