#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace polarsing {

// Exit codes: 0 success, 1 negative comparison or domain error, 2 invalid input.
int run_cli(int argc, char** argv, std::ostream& out, std::ostream& err);
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace polarsing
