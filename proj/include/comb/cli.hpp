// Command-line front door.  All numeric output is byte-deterministic:
// rationals print as num/den, reals in 17-significant-digit lowercase
// scientific notation.
//
// Exit codes: 0 ok, 2 validation error, 3 infeasible request,
// 4 internal tolerance failure.
#pragma once

#include <iosfwd>

namespace comb::cli {

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace comb::cli
