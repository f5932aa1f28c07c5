#pragma once

#include <iosfwd>

namespace grbraid::cli {

/// Exit codes: 0 success, 1 a verification failed, 2 usage or input error.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace grbraid::cli
