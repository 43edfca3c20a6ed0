#ifndef LIEGROWTH_CLI_HPP
#define LIEGROWTH_CLI_HPP

#include <iosfwd>

namespace liegrowth {

// Runs one subcommand. Exit status: 0 success, 2 usage error, 1 computation
// error. Output is deterministic for a fixed argv.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace liegrowth

#endif
