#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace sa::cli {

// exit status: 0 all checks pass, 1 some check failed, 2 malformed input or usage, 3 precondition failure
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace sa::cli
