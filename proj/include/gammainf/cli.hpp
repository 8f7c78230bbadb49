#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace gammainf {

// Runs the command-line interface. Exit codes: 0 ok/true, 1 fail/false,
// 2 usage or parse error, 3 fuel exhausted.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace gammainf
