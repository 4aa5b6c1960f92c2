#ifndef KGC_TOOLS_CLI_HPP
#define KGC_TOOLS_CLI_HPP

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace kgc::cli {

enum ExitCode { exit_ok = 0, exit_failure = 1, exit_usage = 2 };

/// Parsed flags shared by every subcommand.
struct RunConfig {
  std::string policy = "ascending";
  std::string isolated;
  int max_out = 2;
  std::uint64_t seed = 1;
  int trials = 25;
  std::string in_path;
  std::string out_path;
};

/// Runs the command line (argv[0] is the program name). Results go to `out`,
/// diagnostics to `err`; the return value is the process exit code.
int run(const std::vector<std::string>& argv, std::ostream& out, std::ostream& err);

}  // namespace kgc::cli

#endif  // KGC_TOOLS_CLI_HPP
