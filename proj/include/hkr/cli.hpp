#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace hkr {

// Runs the command line given without the program name. Returns 0 on
// success, 1 when a check fails and 2 on a usage error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hkr
