#pragma once

#include <ostream>

namespace mvz::cli {

/// Parses argv, runs one subcommand and writes a JSON report (or error
/// object) to out. Returns 0 on success, 2 when a configured bound was
/// exhausted and 1 for every other failure.
int run(int argc, const char* const* argv, std::ostream& out);

}  // namespace mvz::cli
