#pragma once

#include <istream>
#include <ostream>

namespace dyckpop {

/// Exit codes: 0 success, 1 failed verification or runtime error, 2 usage error.
int run_cli(int argc, const char* const* argv, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace dyckpop
