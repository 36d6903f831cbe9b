#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace punctured::cli {

// Runs one invocation; args excludes the program name. Returns the exit code:
// 0 success or verified, 1 verification failure, 2 usage or input error.
int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

} // namespace punctured::cli
