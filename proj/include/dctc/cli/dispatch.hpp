#pragma once

#include <ostream>

#include "dctc/cli/config.hpp"

namespace dctc::cli {

/// Runs one subcommand. The artifact goes to `out` (or to config.out when
/// set); failures are reported on `err` as a one-line JSON object
/// {"error": ..., "message": ...}. Returns the process exit status, 0 or 1.
int dispatch(const RunConfig& config, std::ostream& out, std::ostream& err);

/// parse_args followed by dispatch, with usage errors reported like any other
/// failure. --help prints to `out` and returns 0.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace dctc::cli
