#pragma once

#include <ostream>

namespace ada::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitIo = 2;
inline constexpr int kExitUsage = 64;     // EX_USAGE
inline constexpr int kExitData = 65;      // EX_DATAERR
inline constexpr int kExitSoftware = 70;  // EX_SOFTWARE

struct Terminal {
  // Table styling is used only when the output is a terminal and
  // ADA_NO_COLOR is unset.
  bool stdout_is_tty = false;
};

// Runs `ada <command> ...`. Data goes to `out`, diagnostics to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err,
        Terminal terminal = {});

}  // namespace ada::cli
