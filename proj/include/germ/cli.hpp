#ifndef GERM_CLI_HPP
#define GERM_CLI_HPP

#include <iosfwd>

namespace germ {

// Runs one command-line request against the given streams. Exit codes:
// 0 success, 2 parse or validation failure (positioned diagnostics on err),
// 3 degree cap exceeded (err carries a hint to raise --cap).
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace germ

#endif
