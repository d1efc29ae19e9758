// Command-line surface. run_cli is the whole program minus main(), so tests
// can drive subcommands in-process and check exit codes and output.
#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace polystab {

// exit 0: pass/success; 1: verification failure or counterexample found; 2: usage error
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace polystab
