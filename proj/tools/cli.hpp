#pragma once

#include <iosfwd>

namespace twinv {

enum ExitCode : int {
  kExitOk = 0,
  kExitCheckFailed = 1,
  kExitConfig = 2,
  kExitCap = 3,
  kExitIo = 4,
};

/// Full command-line front end. Output goes to `out` unless --out names a file.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace twinv
