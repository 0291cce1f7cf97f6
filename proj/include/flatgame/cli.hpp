// Command-line surface. run_cli is the whole program behind the flatgame
// binary; it is a library function so the command contract (output bytes and
// exit codes) is testable directly.
//
// Exit codes: 0 success, 2 usage error, 3 domain error.

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace flatgame {

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace flatgame
