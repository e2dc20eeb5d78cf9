#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace pmc {

// args[0] is the program name. Exit codes: 0 pass, 1 axiom violations, 2 input error.
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace pmc
