#pragma once

#include <iosfwd>

namespace towers::cli {

// Runs one full command line. Data goes to out, trace and error messages to
// err. Returns the process exit status: 0 on success, 1 on domain errors,
// 2 on usage or syntax errors.
int run(int argc, const char* const* argv, std::ostream& out,
        std::ostream& err);

}  // namespace towers::cli
