#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace wps::cli {

enum ExitCode : int { ok = 0, rejected = 1, bad_input = 2 };

// args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace wps::cli
