#pragma once

#include <iosfwd>

namespace freecomm {

// The `freecomm` command line.  Exit codes: 0 success, 1 a check failed or
// two maps differ, 2 usage, parse or validation error.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace freecomm
