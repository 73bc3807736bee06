#pragma once

#include "orbitope/io.hpp"

#include <iosfwd>
#include <string>
#include <vector>

namespace orbitope::cli {

/// Exit codes.
enum Exit : int { ok = 0, internal = 1, parse = 2, precondition = 3, resource = 4 };

struct RunReport {
  int exit_code = ok;
  /// {"schema": 1, "command", "input_digest", "result", "mode", "timing_ms"} or an error object.
  Json json;
  /// Help or usage text when no JSON is produced.
  std::string text;
};

/// Runs one subcommand; `args` excludes the program name.
RunReport dispatch(const std::vector<std::string>& args);

/// dispatch + printing; returns the exit code.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace orbitope::cli
