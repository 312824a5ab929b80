// Batch command-line surface: one subcommand per operation, JSON in/out.
#pragma once

#include <iostream>
#include <string>
#include <vector>

namespace gct {

// Exit codes: 0 success, 1 domain error, 2 usage error.
int cli_run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
            std::ostream& err);

}  // namespace gct
