#pragma once

#include <iosfwd>
#include <string>

#include "apollonite/packing.hpp"

namespace apollonite::cli {

enum ExitCode : int { ok = 0, verification_failed = 1, usage_error = 2 };

// Entry point shared by the executable and the tests.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

// "c,cx,cy" in curvature coordinates; throws std::invalid_argument
Circle parse_circle(const std::string& s);

}  // namespace apollonite::cli
