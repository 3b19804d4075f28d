#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace plgroup::cli {

// Dispatches one command.  args excludes the program name.  Exit status:
// 0 success, 1 domain error (error name on err), 2 usage error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace plgroup::cli
