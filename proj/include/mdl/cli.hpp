#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace mdl::cli {

// Exit status contract of the `mdl` command.
enum ExitStatus : int {
  kOk = 0,
  kForbidden = 1,   // `check` verdict, not an error
  kInvalid = 2,     // parse or validation failure
  kUsage = 3,
};

struct Environment {
  // MDL_TEMPLATE_DIR: directory holding verbatim.json / corrected.json
  // license templates that override the built-in ones.
  std::optional<std::string> template_dir;

  static Environment from_process();
};

/// Runs `mdl` with `args` (excluding the program name).
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err, const Environment& env = {});

}  // namespace mdl::cli
