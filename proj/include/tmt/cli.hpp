#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace tmt {

// Full command-line driver, separated from main() so tests can run it
// in-process. args excludes the program name. Exit codes: 0 verified,
// 1 identity violation, 2 usage error, 3 budget exceeded.
int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err);

}  // namespace tmt
