#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace arbor {

// Full command-line entry point minus process concerns. Returns the exit
// code: 0 success, 1 parse error, 2 domain error, 3 resource or search
// bound exceeded, 4 verification failure.
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace arbor
