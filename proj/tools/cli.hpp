#ifndef PCG_TOOLS_CLI_HPP_
#define PCG_TOOLS_CLI_HPP_

#include <iosfwd>
#include <string>
#include <vector>

namespace pcg::cli {

  // Exit codes.
  inline constexpr int exit_ok       = 0;  // computed, or the property holds
  inline constexpr int exit_property = 1;  // property fails / witness found
  inline constexpr int exit_usage    = 2;  // bad input or usage
  inline constexpr int exit_capacity = 3;  // resource cap hit

  // Runs the command line `args` (args[0] is the program name). Results go
  // to `out`, or to the file named by -o; diagnostics go to `err`.
  int run(std::vector<std::string> const& args, std::ostream& out,
          std::ostream& err);

}  // namespace pcg::cli

#endif  // PCG_TOOLS_CLI_HPP_
