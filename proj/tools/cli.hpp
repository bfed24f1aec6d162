#pragma once

#include <iosfwd>

namespace hf::cli {

enum ExitCode : int {
  Ok = 0,
  InvalidInput = 1,
  NotAdmissibleOrUnbounded = 2,
  NotCombinatorial = 3,
  Usage = 4,
  Internal = 5,
};

/// Runs the command line tool. Reports go to `out`, diagnostics to `err`;
/// in --json mode error reports are written to `out` as JSON.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace hf::cli
