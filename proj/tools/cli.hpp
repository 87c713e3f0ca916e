#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ordfuse::cli {

/// Exit codes: 0 success, 1 input error, 2 numeric/degenerate, 3 internal.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ordfuse::cli
