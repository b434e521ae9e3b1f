#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace tightspan::cli {

// Process exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitVerificationFailed = 1;
inline constexpr int kExitError = 2;

struct Environment {
  // ANSI colors in `trace` output. Ignored when TIGHTSPAN_NO_COLOR is set.
  bool color = false;
};

// Entry point shared by main() and the tests. args[0] is the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
        const Environment& env = {});

}  // namespace tightspan::cli
