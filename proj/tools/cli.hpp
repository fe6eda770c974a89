#ifndef WREATH_TOOLS_CLI_HPP_
#define WREATH_TOOLS_CLI_HPP_

#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

namespace wreath::cli {

enum ExitCode : int {
  kSuccess      = 0,
  kVerifyFailed = 1,
  kInputError   = 2,
  kCapExhausted = 3,
};

enum class Format { json, gap, text };

struct RunConfig {
  std::size_t coset_cap    = 1'000'000;
  std::size_t oracle_limit = 4096;
  Format      format       = Format::json;
};

// Runs one wreathctl command; `args` excludes the program name.
int run(std::vector<std::string> const& args, std::ostream& out,
        std::ostream& err);

}  // namespace wreath::cli

#endif  // WREATH_TOOLS_CLI_HPP_
