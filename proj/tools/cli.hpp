#pragma once

#include <iosfwd>

namespace pnw::cli {

enum ExitCode : int {
    ok = 0,        ///< success, or a positive verdict
    negative = 1,  ///< not-normal, absent, table mismatch
    usage = 2,     ///< bad arguments, malformed word, bound exceeded
};

/// Runs one command line. Diagnostics go to `err` as a single line.
int run(int argc, const char* const* argv, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace pnw::cli
