#pragma once

#include <ostream>

namespace cft::cli {

/// Runs one `cft` subcommand. Returns 0 on success, 1 on a library error
/// (one-line diagnostic on `err`), 2 on a usage error.
int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace cft::cli
