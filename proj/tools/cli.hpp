#pragma once

#include <iosfwd>

namespace spx::cli {

// Runs one sp-extremal invocation. Exit codes: 0 success, 1 a check or
// verification failed, 2 usage or input error (usage text goes to err).
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace spx::cli
