#pragma once

#include <iosfwd>

namespace rifs {

// Parses argv and runs one subcommand.  Exit status: 0 on success, 1 on a
// library error (error JSON written to `err`), 2 on a usage error.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace rifs
